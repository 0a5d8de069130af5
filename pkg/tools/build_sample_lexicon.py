#!/usr/bin/env python3
"""Regenerate src/gramsteg/data/sample_lexicon.txt.

Words come from sound triliteral roots pushed through common Arabic
templates (unvocalised):

* verb       past and present conjugations (كتب، كتبوا، يكتب، تكتبون ...)
* noun       active/passive participles, place nouns and the fi'al form,
             bare and with the article (كاتب، الكاتب، مكتوب، مكتب ...)
* adverbial  a handful of real adverbs of time and place followed by
             prepositional phrases with an attached preposition
             (بالكاتب، للمكتوب، كالمكتب ...)

The output is deterministic.  Run from the repository root.
"""

from pathlib import Path

ROOTS = """
كتب درس فتح شرب لعب جلس خرج دخل رجع سمع علم عمل حمل نظر ركب سكن طلب غسل
قتل كسر نصر ضرب حفظ فهم صنع زرع قطع جمع بعث حرس حصد حفر خدم خلق ذكر رسم
رفع رقص سبح سجد سرق سلم شكر صبر ضحك طبخ ظلم عبد عرف عزف غرس فقد قبل كذب
لبس لمس مدح مسح نزل نشر نفع هجر هرب حكم حسب حرث بلغ بحث ترك ثبت جرح حبس
حجز حدث حذف حرق حضر خسر خطب خلع ربط رحم رزق رصد رفض رقب سبق سحب سطر سفر
سكب سكت شرح شرف شعر شغل شهد صدق صرف صعد صلح طرد طرق ظهر عبر عدل عرض عصر
عقد غفر غلب فحص فرح فرق فصل فضل قبض قدر قصد قطف كرم كسب كشف لحق لزم مزج
مسك منع نبت نجح نسخ نطق نظم نفذ نقل نقش هبط هدم هزم حلب خبز خرق ذبح رسب
ركض زحف سلب شطب صفق طحن عجن فتش قذف كنس لصق نحت نفخ نهب حصل جذب سرد رشق
صدم
""".split()

ADVERBS = """
اليوم غدا أمس صباحا مساء ليلا نهارا هنا هناك الآن دائما أبدا قريبا سريعا
فوق تحت أمام خلف حول بين عند لدى داخل خارج يمين يسار شمالا جنوبا شرقا غربا
أحيانا معا جدا كثيرا قليلا فجأة حالا عصرا ظهرا سحرا
""".split()


def unique_roots():
    seen = dict.fromkeys(ROOTS)
    for r in seen:
        assert len(r) == 3 and len(set(r)) == 3 and not set(r) & set("اويءأإآى"), r
    return list(seen)


def verb_forms(r):
    past = ["", "ت", "نا", "وا", "تم", "ن", "تا", "ا", "تن"]
    present = [("ي", ""), ("ت", ""), ("ن", ""), ("أ", ""), ("ي", "ون"), ("ت", "ون"),
               ("ي", "ان"), ("ت", "ان"), ("ي", "ن"), ("ت", "ين")]
    return [r + s for s in past] + [p + r + s for p, s in present]


def stems(r):
    c1, c2, c3 = r
    return {
        "fail": c1 + "ا" + c2 + c3,
        "mafool": "م" + c1 + c2 + "و" + c3,
        "mafal": "م" + c1 + c2 + c3,
        "fial": c1 + c2 + "ا" + c3,
    }


def noun_forms(r):
    s = stems(r)
    out = []
    for key in ("fail", "mafool"):
        x = s[key]
        out += [x, "ال" + x, x + "ة", "ال" + x + "ة", x + "ون", "ال" + x + "ون"]
    for key in ("mafal", "fial"):
        out += [s[key], "ال" + s[key]]
    return out


def with_preposition(prep, noun):
    if prep == "ل":
        return ("لل" + noun[1:]) if noun.startswith("ل") else "لل" + noun
    return prep + "ال" + noun


def adverbial_forms(r):
    s = stems(r)
    return [with_preposition(p, x) for p in "بلك"
            for x in (s["fail"], s["fail"] + "ة", s["mafool"], s["mafal"])]


def build():
    roots = unique_roots()
    sections = {"verb": [], "noun": [], "adverbial": list(ADVERBS)}
    # form-major order so every root appears among the low-numbered words
    for name, gen in (("verb", verb_forms), ("noun", noun_forms), ("adverbial", adverbial_forms)):
        per_root = [gen(r) for r in roots]
        for i in range(len(per_root[0])):
            sections[name] += [forms[i] for forms in per_root]
    taken = set()
    for name in sections:
        kept = []
        for w in sections[name]:
            if w not in taken:
                taken.add(w)
                kept.append(w)
        sections[name] = kept
    return sections


def main():
    sections = build()
    lines = [
        "# Sample Arabic lexicon generated by tools/build_sample_lexicon.py.",
        "# Word order is the index: do not reorder entries of an existing lexicon.",
    ]
    for name, words in sections.items():
        lines.append("")
        lines.append(f"[{name}]")
        lines += words
    out = Path("src/gramsteg/data/sample_lexicon.txt")
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    for name, words in sections.items():
        print(name, len(words), (len(words)).bit_length() - 1)


if __name__ == "__main__":
    main()
