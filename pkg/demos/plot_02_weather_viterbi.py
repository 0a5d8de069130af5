"""
Forward and Viterbi on a two-state weather model
================================================

"""

import gramsteg
from gramsteg import HmmModel, enumerate_paths_oracle, forward_probability, viterbi

model = HmmModel.load(gramsteg.data_path("weather.hmm"))
print(model.dumps())

obs = ["Hike", "Shop", "Clean"]

# probability of the whole observation sequence, summed over hidden paths
print("P(obs) =", round(forward_probability(model, obs), 6))

# most likely hidden path; the last state is the best successor of the
# final observed state, so the path is one longer than the observations
best = viterbi(model, obs)
print("path:", " ".join(best.path), " P(path) =", round(best.probability, 6))

# brute force over all 2**3 paths agrees
print(enumerate_paths_oracle(model, obs))
