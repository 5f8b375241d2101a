"""Small runs of every verification campaign.  The full-size runs live in
tests/test_acceptance.py; `pvbraid campaign NAME` runs them from the shell."""

from pvbraid import campaigns

runs = {
    "action": dict(ns=(3,)),
    "realizability": dict(max_exhaustive=4, random_n=5, random_trials=500),
    "lemma2": dict(n=3, trials=500),
    "lemma3": dict(n=4),
    "lemma4": dict(n=4, trials=500),
    "d_relations": dict(n=4, trials=100),
    "classical_images": dict(trials=100, max_n=4, max_len=20),
    "theorem": dict(n=3, len_cap=2),
}
for name, kw in runs.items():
    rep = campaigns.CAMPAIGNS[name](**kw)
    print(rep.summary())
    assert rep.ok, rep.violations[:3]
