"""
Verification campaigns: exhaustive or seeded-random checks of the goodness
lemmas, of ``d`` against the group relations, of classical images, and of
the inclusion of classical braids at desk scale.

Every campaign returns a :class:`CampaignReport`.  Violations carry a
witness shrunk by greedy letter removal, and a fixed seed with fixed
parameters reproduces the same report (runtime aside).
"""

from __future__ import annotations

import itertools
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .classical import artin_action, sigma_equivalent
from .classify import classify
from .core import (
    BraidWord,
    GeneratorLetter,
    GroupMode,
    all_letters,
    all_sign_sets,
    canonical_sign_set,
    SignSet,
)
from .diagrams import DiagramLetter, DiagramWord, is_pure, o_map, strand_positions
from .projection import delete_bad, reconstruct_classical
from .rewriting import (
    Move,
    apply_move,
    equivalent,
    neighbors,
    position_map,
    r3_windows,
    relation_instances,
    separating_invariant,
)
from .signs import act, is_realizable

DEFAULT_SEED = 0


@dataclass
class CampaignReport:
    name: str
    params: dict
    cases: int = 0
    violations: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    records: list[dict] = field(default_factory=list)
    runtime: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self, include_runtime: bool = True) -> dict:
        out = {
            "campaign": self.name,
            "params": self.params,
            "cases": self.cases,
            "violations": self.violations,
            "details": self.details,
            "records": self.records,
        }
        if include_runtime:
            out["runtime"] = round(self.runtime, 3)
        return out

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return f"{self.name}: {self.cases} cases, {status}, {self.runtime:.2f}s"


def shrink_word(w: BraidWord, fails: Callable[[BraidWord], bool]) -> BraidWord:
    """Drop letters one at a time while ``fails`` keeps holding."""
    changed = True
    while changed:
        changed = False
        for k in range(len(w)):
            cand = w.replace(w.letters[:k] + w.letters[k + 1:])
            if fails(cand):
                w = cand
                changed = True
                break
    return w


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    letters = all_letters(n)
    return BraidWord(n, tuple(rng.choice(letters) for _ in range(length)))


def random_pure_diagram(rng: random.Random, n: int, max_len: int) -> DiagramWord:
    """A random classical pure diagram: a random prefix, then a bubble sort back to the identity."""
    budget = max(0, max_len - n * (n - 1) // 2)
    prefix = [DiagramLetter("s", rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(rng.randint(0, budget))]
    dw = DiagramWord(n, tuple(prefix))
    order = list(strand_positions(dw)[-1])
    tail = []
    done = False
    while not done:
        done = True
        for p in range(n - 1):
            if order[p] > order[p + 1]:
                order[p], order[p + 1] = order[p + 1], order[p]
                tail.append(DiagramLetter("s", p + 1, rng.choice((1, -1))))
                done = False
    return DiagramWord(n, tuple(prefix + tail))


def rule_mode(rule: str) -> GroupMode:
    return {"virtualize": GroupMode.TildePBn, "involutive": GroupMode.Gn2}.get(rule, GroupMode.PBn)


MOVE_KINDS = (
    ("far_comm", ""),
    ("free_insert", ""),
    ("free_reduce", ""),
    ("involutive", "flip"),
    ("involutive", "square_insert"),
    ("involutive", "square_reduce"),
    ("r3", ""),
    ("virtualize", ""),
)


def planted_move(rng: random.Random, n: int, rule: str, variant: str = "", max_base: int = 12) -> tuple[BraidWord, Move]:
    """A random word together with a move of the given kind that applies to it."""
    letters = all_letters(n)
    base = list(random_word(rng, n, rng.randint(0, max_base)).letters)
    p = rng.randint(1, len(base) + 1)

    def plant(window):
        word = base[:p - 1] + list(window) + base[p - 1:]
        return BraidWord(n, tuple(word))

    if rule == "free_insert" or variant == "square_insert":
        return BraidWord(n, tuple(base)), Move(rule, p, rng.choice(letters), variant)
    if rule == "free_reduce":
        g = rng.choice(letters)
        return plant([g, g.inverse()]), Move(rule, p)
    if variant == "square_reduce":
        g = rng.choice(letters)
        return plant([g, g]), Move(rule, p, None, variant)
    if rule == "far_comm":
        if n < 4:
            raise ValueError("far commutativity needs at least 4 strands")
        i, j, k, l = rng.sample(range(1, n + 1), 4)
        g = GeneratorLetter(i, j, rng.choice((1, -1)))
        h = GeneratorLetter(k, l, rng.choice((1, -1)))
        return plant([g, h]), Move(rule, p)
    if rule == "r3":
        return plant(rng.choice(r3_windows(n)).letters), Move(rule, p)
    # single-letter moves: virtualize, flip
    if not base:
        base.append(rng.choice(letters))
    q = rng.randint(1, len(base))
    return BraidWord(n, tuple(base)), Move(rule, q, None, variant)


# sign-set action and realizability --------------------------------------------


def run_action(ns=(3, 4)) -> CampaignReport:
    """Both sides of every defining relation act identically on every sign set."""
    t0 = time.perf_counter()
    rep = CampaignReport("action", {"n": list(ns)})
    per_mode = Counter()
    for n in ns:
        states = list(all_sign_sets(n))
        for mode in GroupMode:
            for name, lhs, rhs in relation_instances(n, mode):
                for S in states:
                    rep.cases += 1
                    per_mode[mode.value] += 1
                    if act(lhs, S) != act(rhs, S):
                        rep.violations.append(
                            {"mode": mode.value, "relation": name, "lhs": str(lhs), "rhs": str(rhs), "state": str(S)}
                        )
        rep.details[f"sign_sets_n{n}"] = len(states)
    rep.details["cases_per_mode"] = dict(per_mode)
    rep.runtime = time.perf_counter() - t0
    return rep


def _order_sign_bits(order) -> int:
    # s(i,j) = sign(N_j - N_i) with N the position of each strand
    N = {strand: pos for pos, strand in enumerate(order)}
    n = len(order)
    return SignSet.from_upper(n, [1 if N[j] > N[i] else -1 for i, j in itertools.combinations(range(1, n + 1), 2)]).bits


def run_realizability(max_exhaustive: int = 5, random_n: int = 6, random_trials: int = 10**4, seed: int = DEFAULT_SEED) -> CampaignReport:
    """``is_realizable`` against brute force over every linear order."""
    t0 = time.perf_counter()
    rep = CampaignReport(
        "realizability",
        {"max_exhaustive": max_exhaustive, "random_n": random_n, "random_trials": random_trials, "seed": seed},
    )
    rng = random.Random(seed)

    def check(S, table):
        rep.cases += 1
        got = is_realizable(S)
        want = table.get(S.bits)
        if (got is None) != (want is None) or (got is not None and got.order != want):
            rep.violations.append({"state": str(S), "got": None if got is None else list(got.order), "brute": want})

    for n in range(2, max_exhaustive + 1):
        table = {_order_sign_bits(o): o for o in itertools.permutations(range(1, n + 1))}
        count = 0
        for S in all_sign_sets(n):
            check(S, table)
            count += S.bits in table
        rep.details[f"realizable_n{n}"] = count
    if random_trials:
        n = random_n
        table = {_order_sign_bits(o): o for o in itertools.permutations(range(1, n + 1))}
        npairs = n * (n - 1) // 2
        hits = 0
        for t in range(random_trials):
            # mix uniform masks with realizable ones so both branches get exercised
            if t % 2:
                bits = rng.getrandbits(npairs)
            else:
                order = list(range(1, n + 1))
                rng.shuffle(order)
                bits = _order_sign_bits(order)
                if rng.random() < 0.5:
                    bits ^= 1 << rng.randrange(npairs)
            S = SignSet(n, bits)
            check(S, table)
            hits += bits in table
        rep.details[f"random_realizable_n{n}"] = hits
    rep.runtime = time.perf_counter() - t0
    return rep


# goodness lemmas ----------------------------------------------------------------


def _inverse_pair_mismatch(w: BraidWord) -> bool:
    f = classify(w).flags
    return any(
        w.letters[k + 1] == w.letters[k].inverse() and f[k] != f[k + 1] for k in range(len(w) - 1)
    )


def run_lemma2(n: int = 4, trials: int = 10**4, seed: int = DEFAULT_SEED) -> CampaignReport:
    """Adjacent ``g g^-1`` letters are both good or both bad."""
    t0 = time.perf_counter()
    rep = CampaignReport("lemma2", {"n": n, "trials": trials, "seed": seed})
    letters = all_letters(n)
    for S in all_sign_sets(n):
        for g in letters:
            rep.cases += 1
            f = classify(BraidWord(n, (g, g.inverse())), S).flags
            if f[0] != f[1]:
                rep.violations.append({"kind": "exhaustive", "state": str(S), "letter": str(g), "flags": list(f)})
    rep.details["exhaustive_cases"] = rep.cases
    rng = random.Random(seed)
    both = Counter()
    for _ in range(trials):
        prefix = random_word(rng, n, rng.randint(0, 12))
        suffix = random_word(rng, n, rng.randint(0, 6))
        g = rng.choice(letters)
        w = prefix * BraidWord(n, (g, g.inverse())) * suffix
        k = len(prefix)
        f = classify(w).flags
        rep.cases += 1
        both["good" if f[k] else "bad"] += f[k] == f[k + 1]
        if f[k] != f[k + 1]:
            witness = shrink_word(w, _inverse_pair_mismatch)
            rep.violations.append({"kind": "random", "word": str(w), "witness": str(witness), "position": k + 1})
    rep.details["random_pairs"] = dict(both)
    rep.runtime = time.perf_counter() - t0
    return rep


def run_lemma3(n: int = 5) -> CampaignReport:
    """Flags survive an ``r3`` rewrite letter by letter, and a window never has exactly two good letters.

    Exhaustive for every strand count from 3 to ``n``: all sign sets, all
    index triples, all implemented ``r3`` windows.
    """
    t0 = time.perf_counter()
    rep = CampaignReport("lemma3", {"n": n})
    total = Counter()
    first_two_good = 0
    for m in range(3, n + 1):
        hist = Counter()
        windows = r3_windows(m)
        for S in all_sign_sets(m):
            for win in windows:
                rewritten = win.replace(win.letters[::-1])
                before = classify(win, S).flags
                after = classify(rewritten, S).flags
                count = sum(before)
                hist[count] += 1
                rep.cases += 1
                if before[0] and before[1]:
                    first_two_good += 1
                if before != after[::-1] or count == 2:
                    rep.violations.append(
                        {"state": str(S), "window": str(win), "flags": list(before), "rewritten_flags": list(after)}
                    )
        rep.details[f"histogram_n{m}"] = {str(k): v for k, v in sorted(hist.items())}
        total.update(hist)
    rep.details["histogram"] = {str(k): v for k, v in sorted(total.items())}
    rep.details["support"] = sorted(total)
    rep.details["first_two_good_cases"] = first_two_good
    rep.runtime = time.perf_counter() - t0
    return rep


def _moved_flag_mismatches(w: BraidWord, move: Move, mode: GroupMode) -> list[int]:
    w2 = apply_move(w, move, mode)
    f1, f2 = classify(w).flags, classify(w2).flags
    return [q for q, r in position_map(move, len(w)).items() if f1[q] != f2[r]]


def run_lemma4(n: int = 4, trials: int = 10**4, seed: int = DEFAULT_SEED) -> CampaignReport:
    """Letters outside a rewritten window keep their flag under every move kind."""
    t0 = time.perf_counter()
    rep = CampaignReport("lemma4", {"n": n, "trials": trials, "seed": seed})
    rng = random.Random(seed)
    kinds = [k for k in MOVE_KINDS if n >= 4 or k[0] != "far_comm"]
    per_kind = Counter()
    window_checks = 0
    for _ in range(trials):
        rule, variant = rng.choice(kinds)
        mode = rule_mode(rule)
        w, move = planted_move(rng, n, rule, variant)
        per_kind[f"{rule}:{variant}" if variant else rule] += 1
        rep.cases += 1
        p = move.position - 1
        window = {"far_comm": {p, p + 1}, "r3": {p, p + 1, p + 2}}.get(rule, set())
        window_checks += len(window)
        bad = _moved_flag_mismatches(w, move, mode)
        outside = [q for q in bad if q not in window]
        if bad:
            rep.violations.append(
                {"word": str(w), "move": str(move), "mode": mode.value, "positions": [q + 1 for q in bad],
                 "outside_window": bool(outside)}
            )
    rep.details["moves_per_kind"] = dict(sorted(per_kind.items()))
    rep.details["window_letters_checked"] = window_checks
    rep.runtime = time.perf_counter() - t0
    return rep


# the deletion map ----------------------------------------------------------------


def run_d_relations(
    n: int = 4,
    trials: int = 1000,
    modes=(GroupMode.PBn, GroupMode.TildePBn),
    seed: int = DEFAULT_SEED,
    max_states: int = 10**5,
) -> CampaignReport:
    """For a word and a one-relation neighbour, ``d`` of both are equal or one relation apart."""
    t0 = time.perf_counter()
    rep = CampaignReport(
        "d_relations", {"n": n, "trials": trials, "modes": [m.value for m in modes], "seed": seed, "max_states": max_states}
    )
    rng = random.Random(seed)
    outcome = Counter()
    for t in range(trials):
        mode = modes[t % len(modes)]
        kinds = [
            k for k in MOVE_KINDS
            if rule_mode(k[0]) in (GroupMode.PBn, mode) and (n >= 4 or k[0] != "far_comm")
        ]
        rule, variant = rng.choice(kinds)
        w, move = planted_move(rng, n, rule, variant)
        w2 = apply_move(w, move, mode)
        d1, d2 = delete_bad(w), delete_bad(w2)
        rep.cases += 1
        if d1 == d2:
            outcome["identical"] += 1
            continue
        one_step = any(x == d2 for x, _ in neighbors(d1, mode, allow_growth=True))
        verdict = equivalent(d1, d2, mode, max_len=max(len(w), len(w2)) + 4, max_states=max_states)
        if one_step:
            outcome["one_relation"] += 1
        if verdict.equal:
            outcome["oracle_equal"] += 1
        elif verdict.separated_by:
            outcome["refuted"] += 1
        else:
            outcome["unknown"] += 1
        if not one_step or not verdict.equal:
            rep.violations.append(
                {"mode": mode.value, "word": str(w), "move": str(move), "d_word": str(d1), "d_neighbour": str(d2),
                 "one_relation": one_step, "oracle": verdict.status, "separated_by": verdict.separated_by}
            )
    rep.details["outcomes"] = dict(sorted(outcome.items()))
    rep.details["unknown_fraction"] = outcome["unknown"] / max(1, trials)
    rep.runtime = time.perf_counter() - t0
    return rep


def run_classical_images(trials: int = 1000, max_n: int = 5, max_len: int = 40, seed: int = DEFAULT_SEED) -> CampaignReport:
    """Images of classical pure diagrams are all good, act trivially and reconstruct."""
    t0 = time.perf_counter()
    rep = CampaignReport("classical_images", {"trials": trials, "max_n": max_n, "max_len": max_len, "seed": seed})
    rng = random.Random(seed)
    same_diagram = 0
    for _ in range(trials):
        n = rng.randint(2, max_n)
        dw = random_pure_diagram(rng, n, max_len)
        rep.cases += 1
        problems = []
        # strand-tracking oracle: every pair crosses an even number of times
        crossings = Counter()
        for occ, x in zip(strand_positions(dw), dw.letters):
            crossings[frozenset(occ[x.position - 1:x.position + 1])] += 1
        if any(c % 2 for c in crossings.values()):
            problems.append("odd crossing count")
        w = o_map(dw)
        B = canonical_sign_set(n)
        if not all(classify(w).flags):
            problems.append("bad letter")
        if act(w, B) != B:
            problems.append("nontrivial action")
        if delete_bad(w) != w:
            problems.append("d moves it")
        if not problems:
            rec = reconstruct_classical(w)
            image = o_map(rec.sigma_word)
            for g, ent, h in zip(w.letters, rec.virtualization_witness, image.letters):
                if ent.source != g or ent.emitted != h or h.pair != g.pair or h.exponent != g.exponent:
                    problems.append("reconstruction mismatch")
                    break
            if len(image) != len(w):
                problems.append("reconstruction length")
            same_diagram += rec.sigma_word == dw
        if problems:
            rep.violations.append({"n": n, "diagram": str(dw), "image": str(w), "problems": problems})
    rep.details["reconstruction_equals_input_diagram"] = same_diagram
    rep.runtime = time.perf_counter() - t0
    return rep


# the inclusion theorem at desk scale --------------------------------------------------


def pure_classical_words(n: int, len_cap: int) -> list[DiagramWord]:
    letters = [(p, e) for p in range(1, n) for e in (1, -1)]
    out = []
    for L in range(len_cap + 1):
        for t in itertools.product(letters, repeat=L):
            dw = DiagramWord(n, tuple(DiagramLetter("s", p, e) for p, e in t))
            if is_pure(dw):
                out.append(dw)
    return out


def run_theorem_desk(n: int = 3, len_cap: int = 4, max_states: int = 2 * 10**5) -> CampaignReport:
    """Compare equality of classical pure braids with equality of their images in the virtualization quotient.

    Classical equality is decided exactly by the Artin action and also
    searched for with the Artin relations; virtual equality is searched for
    in TildePBn and refuted by its abelian invariant.  A counterexample is a
    pair joined in TildePBn whose classical braids differ.
    """
    t0 = time.perf_counter()
    rep = CampaignReport("theorem_desk", {"n": n, "len_cap": len_cap, "max_states": max_states})
    mode = GroupMode.TildePBn
    words = pure_classical_words(n, len_cap)
    images = [o_map(d) for d in words]
    classes: dict = {}
    for k, d in enumerate(words):
        classes.setdefault(artin_action(d), []).append(k)
    label = {}
    virtual_link = {}
    classical_link = {}
    for c, members in enumerate(classes.values()):
        rep_k = members[0]
        for k in members:
            label[k] = c
            v = equivalent(images[k], images[rep_k], mode, max_states=max_states)
            virtual_link[k] = v.equal
            s = sigma_equivalent(words[k], words[rep_k], max_states=max_states)
            classical_link[k] = s.status == "equal"
    counts = Counter()
    for x, y in itertools.combinations(range(len(words)), 2):
        rep.cases += 1
        if label[x] == label[y]:
            v_equal = virtual_link[x] and virtual_link[y]
            counts["classical_equal/virtual_equal" if v_equal else "classical_equal/virtual_unknown"] += 1
            if not (classical_link[x] and classical_link[y]):
                counts["classical_equal/sigma_search_unknown"] += 1
            if separating_invariant(images[x], images[y], mode):
                rep.violations.append({"kind": "image separated from an equal braid", "a": str(words[x]), "b": str(words[y])})
            elif not v_equal:
                rep.records.append({"a": str(words[x]), "b": str(words[y]), "classical": "equal", "virtual": "unknown"})
            continue
        if separating_invariant(images[x], images[y], mode):
            counts["classical_distinct/virtual_distinct"] += 1
            continue
        v = equivalent(images[x], images[y], mode, max_states=max_states)
        if v.equal:
            counts["counterexample"] += 1
            rep.violations.append(
                {"kind": "counterexample", "a": str(words[x]), "b": str(words[y]),
                 "trace": [str(s) for s in v.trace]}
            )
        else:
            counts["classical_distinct/virtual_unknown"] += 1
            rep.records.append(
                {"a": str(words[x]), "b": str(words[y]), "classical": "distinct", "virtual": "unknown",
                 "states": v.stats.get("states")}
            )
    rep.details["words"] = len(words)
    rep.details["classical_classes"] = len(classes)
    rep.details["pair_counts"] = dict(sorted(counts.items()))
    rep.details["counterexamples"] = counts["counterexample"]
    rep.details["unknown_pairs"] = counts["classical_distinct/virtual_unknown"] + counts["classical_equal/virtual_unknown"]
    rep.runtime = time.perf_counter() - t0
    return rep


CAMPAIGNS = {
    "action": run_action,
    "realizability": run_realizability,
    "lemma2": run_lemma2,
    "lemma3": run_lemma3,
    "lemma4": run_lemma4,
    "d_relations": run_d_relations,
    "classical_images": run_classical_images,
    "theorem": run_theorem_desk,
}


__all__ = [
    "CampaignReport",
    "CAMPAIGNS",
    "DEFAULT_SEED",
    "MOVE_KINDS",
    "planted_move",
    "pure_classical_words",
    "random_pure_diagram",
    "random_word",
    "rule_mode",
    "run_action",
    "run_classical_images",
    "run_d_relations",
    "run_lemma2",
    "run_lemma3",
    "run_lemma4",
    "run_realizability",
    "run_theorem_desk",
    "shrink_word",
]
