"""Bit-granular access to byte buffers.

Bits are numbered most-significant first: the byte ``0xB6`` reads as the
group ``1 0 1 1 0 1 1 0``.  :class:`BitCursor` is the scalar primitive;
:func:`split_groups` and :func:`join_groups` are the vectorised forms the
codecs run on, and both agree with a cursor walking the same schedule.
"""

from __future__ import annotations

import struct

import numpy as np

from .errors import InvalidArgument, MalformedFrame

MAX_GROUP_BITS = 32
HEADER_BYTES = 4


def _check_width(n: int) -> None:
    if not 1 <= n <= MAX_GROUP_BITS:
        raise InvalidArgument(f"bit count must be in 1..{MAX_GROUP_BITS}, got {n}")


class BitCursor:
    """Positioned reader/writer over a byte buffer.

    Reads past the end are zero-filled and set :attr:`padded`; writes past
    the end grow the buffer.  A cursor is meant to have a single owner.
    """

    def __init__(self, buffer: bytes | bytearray = b"", bit_position: int = 0):
        self.buffer = bytearray(buffer)
        if not 0 <= bit_position <= 8 * len(self.buffer):
            raise InvalidArgument(f"bit position {bit_position} outside buffer")
        self.bit_position = bit_position
        self.padded = False

    def __repr__(self) -> str:
        return f"BitCursor(len={len(self.buffer)}, bit_position={self.bit_position})"

    @property
    def bit_length(self) -> int:
        return 8 * len(self.buffer)

    @property
    def remaining(self) -> int:
        return self.bit_length - self.bit_position

    def at_end(self) -> bool:
        return self.bit_position >= self.bit_length

    def read_bits(self, n: int) -> int:
        """Return the next ``n`` bits as an unsigned integer.

        If fewer than ``n`` bits remain, the missing low-order bits are
        zero, the cursor stops at the end and ``padded`` becomes true.
        """
        _check_width(n)
        take = min(n, self.remaining)
        value = 0
        pos = self.bit_position
        for _ in range(take):
            bit = (self.buffer[pos >> 3] >> (7 - (pos & 7))) & 1
            value = (value << 1) | bit
            pos += 1
        self.bit_position = pos
        if take < n:
            self.padded = True
            value <<= n - take
        return value

    def write_bits(self, value: int, n: int) -> None:
        """Write the low ``n`` bits of ``value`` at the cursor, MSB first."""
        _check_width(n)
        if value < 0:
            raise InvalidArgument("value must be non-negative")
        value &= (1 << n) - 1
        end = self.bit_position + n
        need = (end + 7) >> 3
        if need > len(self.buffer):
            self.buffer.extend(bytes(need - len(self.buffer)))
        pos = self.bit_position
        for shift in range(n - 1, -1, -1):
            mask = 0x80 >> (pos & 7)
            if (value >> shift) & 1:
                self.buffer[pos >> 3] |= mask
            else:
                self.buffer[pos >> 3] &= ~mask & 0xFF
            pos += 1
        self.bit_position = end

    def to_bytes(self, nbits: int | None = None) -> bytes:
        """Buffer contents, optionally truncated to the first ``nbits`` bits.

        A trailing partial byte keeps only its leading bits; the rest are zero.
        """
        if nbits is None:
            return bytes(self.buffer)
        if nbits < 0 or nbits > self.bit_length:
            raise InvalidArgument(f"cannot truncate to {nbits} bits")
        out = bytearray(self.buffer[: (nbits + 7) >> 3])
        if nbits & 7:
            out[-1] &= (0xFF << (8 - (nbits & 7))) & 0xFF
        return bytes(out)


def frame_payload(payload: bytes) -> bytes:
    """Prefix ``payload`` with its length as a 4-byte big-endian integer."""
    if len(payload) >= 1 << 32:
        raise InvalidArgument("payload too large for a 32-bit length header")
    return struct.pack(">I", len(payload)) + bytes(payload)


def unframe_payload(buffer: bytes) -> bytes:
    """Inverse of :func:`frame_payload`; bytes after the declared length are ignored."""
    if len(buffer) < HEADER_BYTES:
        raise MalformedFrame(f"need {HEADER_BYTES} header bytes, have {len(buffer)}")
    (length,) = struct.unpack(">I", buffer[:HEADER_BYTES])
    available = len(buffer) - HEADER_BYTES
    if length > available:
        raise MalformedFrame(f"frame declares {length} bytes but only {available} recovered")
    return bytes(buffer[HEADER_BYTES : HEADER_BYTES + length])


def _cycle_layout(widths) -> tuple[np.ndarray, np.ndarray, int]:
    w = np.asarray(widths, dtype=np.int64)
    if w.ndim != 1 or w.size == 0:
        raise InvalidArgument("width cycle must be a non-empty sequence")
    for n in w:
        _check_width(int(n))
    starts = np.concatenate(([0], np.cumsum(w)[:-1]))
    return w, starts, int(w.sum())


def groups_needed(nbits: int, widths) -> int:
    """Number of groups from the repeating ``widths`` cycle needed to cover ``nbits`` bits."""
    w, starts, period = _cycle_layout(widths)
    full, rem = divmod(nbits, period)
    return full * len(w) + int(np.count_nonzero(starts < rem))


def split_groups(data: bytes, widths) -> np.ndarray:
    """Cut ``data`` into MSB-first groups whose sizes cycle through ``widths``.

    Produces exactly as many groups as are needed to cover every bit; the
    last group is zero-padded.  Equivalent to repeated
    :meth:`BitCursor.read_bits` calls until the cursor reaches the end.
    """
    w, starts, period = _cycle_layout(widths)
    nbits = 8 * len(data)
    count = groups_needed(nbits, w)
    if count == 0:
        return np.zeros(0, dtype=np.uint64)
    rows = -(-nbits // period)
    bits = np.zeros(rows * period, dtype=np.uint64)
    bits[:nbits] = np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8))
    bits = bits.reshape(rows, period)
    values = np.empty((rows, len(w)), dtype=np.uint64)
    for k, (s, n) in enumerate(zip(starts, w)):
        weights = np.left_shift(np.uint64(1), np.arange(n - 1, -1, -1, dtype=np.uint64))
        values[:, k] = bits[:, s : s + n] @ weights
    return values.reshape(-1)[:count]


def join_groups(values, widths) -> tuple[bytes, int]:
    """Concatenate group values (sizes cycling through ``widths``) into bytes.

    Values are masked to their group width.  Returns the packed bytes
    (final byte zero-padded) and the exact number of meaningful bits.
    """
    w, starts, period = _cycle_layout(widths)
    v = np.asarray(values, dtype=np.uint64).reshape(-1)
    count = v.size
    if count == 0:
        return b"", 0
    rows = -(-count // len(w))
    padded = np.zeros(rows * len(w), dtype=np.uint64)
    padded[:count] = v
    padded = padded.reshape(rows, len(w))
    bits = np.empty((rows, period), dtype=np.uint8)
    for k, (s, n) in enumerate(zip(starts, w)):
        shifts = np.arange(n - 1, -1, -1, dtype=np.uint64)
        bits[:, s : s + n] = (padded[:, k, None] >> shifts) & np.uint64(1)
    full, rem = divmod(count, len(w))
    nbits = full * period + int(w[:rem].sum())
    return np.packbits(bits.reshape(-1)[:nbits]).tobytes(), nbits
