"""Bundled verification suites with machine-readable reports.

Each suite enumerates the checkable identities of one slice of the
library, up to a desk-scale strand bound, and returns a
:class:`VerificationReport` whose overall flag is the conjunction of its
cases.  The combing suite accepts an action-table factory so tests can
run it against a deliberately corrupted table as a negative control.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import abelian, combing, homs, presentations
from .combing import _CombContext, build_action_table
from .words import Word, gen_rho, invert_letters

DEFAULT_MAX_N = 6
DESK_SCALE_BOUND = 8
DEFAULT_SEED = 70839


@dataclass(frozen=True)
class Case:
    case_id: str
    description: str
    expected: str
    got: str

    @property
    def passed(self) -> bool:
        return self.expected == self.got

    def to_json(self) -> dict:
        return {
            "id": self.case_id,
            "description": self.description,
            "expected": self.expected,
            "got": self.got,
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    suite: str
    max_n: int
    cases: list[Case] = field(default_factory=list)

    def add(self, case_id: str, description: str, expected, got) -> None:
        self.cases.append(Case(case_id, description, str(expected), str(got)))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def to_json(self) -> dict:
        ordered = sorted(self.cases, key=lambda c: c.case_id)
        return {
            "suite": self.suite,
            "max_n": self.max_n,
            "cases": [c.to_json() for c in ordered],
            "pass": self.passed,
        }


def random_x_word(rng: random.Random, m: int, max_len: int) -> Word:
    """A random word over the combing alphabet of the m-strand group."""
    alphabet = combing.x_alphabet(m)
    length = rng.randint(0, max_len)
    letters = [
        (rng.choice(alphabet), rng.choice((1, -1))) for _ in range(length)
    ]
    return Word.from_letters(letters)


def _zero(bits) -> bool:
    return not any(bits)


def presentations_suite(max_n: int, rng: random.Random) -> VerificationReport:
    rep = VerificationReport("presentations", max_n)
    for n in range(1, max_n + 1):
        pres = presentations.build_pn_rp2(n)
        rep.add(
            f"pn-gencount-n{n}",
            f"generator count of the {n}-strand projective-plane group",
            n * (n - 1) // 2 + n,
            len(pres.generators),
        )
        rep.add(
            f"pn-relators-nonempty-n{n}",
            "all relators nonempty canonical words",
            True,
            all(not r.is_identity for r in pres.relators),
        )
        rep.add(
            f"pn-iota-kills-n{n}",
            "mod-2 exponent map kills every relator",
            True,
            all(_zero(homs.iota_sharp(n, r)) for r in pres.relators),
        )
        if n >= 2:
            rep.add(
                f"pn-q2-kills-n{n}",
                "quaternion evaluation kills every relator",
                True,
                all(homs.q2_sharp(n, r) == homs.Q_ONE for r in pres.relators),
            )
    for m in range(1, max(0, max_n - 2) + 1):
        pres = presentations.build_gamma_rp2(m, 2)
        rep.add(
            f"gamma-iota-hat-kills-m{m}",
            "restricted mod-2 map kills every two-puncture relator",
            True,
            all(_zero(homs.iota_hat(m, r)) for r in pres.relators),
        )
        if m <= 4:
            rep.add(
                f"gamma-comb-kills-m{m}",
                "every two-puncture relator combs to the empty form",
                True,
                all(combing.comb(m, r).is_identity for r in pres.relators),
            )
        if m >= 2 and m <= 4:
            rep.add(
                f"gamma-forget-hom-m{m}",
                "strand forgetting sends relators to trivial words",
                True,
                all(
                    combing.comb(
                        m - 1, combing.strip_last(m, r)
                    ).is_identity
                    for r in pres.relators
                ),
            )
    sphere = presentations.build_gamma_s2(1, 3)
    rep.add(
        "sphere-1-3-relator",
        "single-strand, three-puncture sphere group relator",
        "A[1,4] A[2,4] A[3,4]",
        " | ".join(str(r) for r in sphere.relators),
    )
    return rep


def _certify_table(table: combing.ActionTable) -> bool:
    """Row pairs for x and x^-1 must compose to the identity on the basis."""
    maps: dict = {}
    for (x, sign, b), image in table.rows.items():
        maps.setdefault((x, sign), {})[b] = image
    for (x, sign), row_map in maps.items():
        inverse_map = maps[(x, -sign)]
        for b in table.basis:
            image = combing._substitute(inverse_map, row_map[b])
            if image != ((b, 1),):
                return False
    return True


def _section_identity(m: int) -> bool:
    pres = presentations.build_gamma_rp2(m - 1, 2)
    for g in pres.generators:
        w = Word.of(g)
        if combing.strip_last(m, combing.section_s(m, w)) != w:
            return False
    return True


def combing_suite(max_n: int, rng: random.Random,
                  table_factory: Callable[[int], combing.ActionTable] = build_action_table,
                  samples: int = 100) -> VerificationReport:
    rep = VerificationReport("combing", max_n)
    ctx = _CombContext(table_factory)
    for m in range(1, max_n + 1):
        rep.add(
            f"table-roundtrip-m{m}",
            "inverse row pairs compose to the identity on the kernel basis",
            True,
            _certify_table(table_factory(m)),
        )
    for m in range(2, max_n + 1):
        rep.add(
            f"section-id-m{m}",
            "strand forgetting after the section is the identity on generators",
            True,
            _section_identity(m),
        )
    for m in range(1, min(max_n - 2, 4) + 1):
        pres = presentations.build_gamma_rp2(m, 2)
        rep.add(
            f"comb-relators-m{m}",
            "relators comb to the empty form",
            True,
            all(
                combing._comb_letters(m, r.letters, ctx).is_identity
                for r in pres.relators
            ),
        )
        ok = True
        for _ in range(samples):
            w = random_x_word(rng, m, 40)
            letters = w.letters + invert_letters(w.letters)
            if not combing._comb_letters(m, letters, ctx).is_identity:
                ok = False
                break
        rep.add(
            f"comb-inverse-m{m}",
            f"{samples} random words times their inverses comb to empty",
            True,
            ok,
        )
        if m <= 3:
            relators = pres.relators
            ok = True
            # random-word normal forms grow exponentially with length, so
            # the insertion checks keep u and v short
            for _ in range(samples // 2):
                u = random_x_word(rng, m, 8)
                v = random_x_word(rng, m, 8)
                r = rng.choice(relators)
                if combing._comb_letters(m, (u * r * v).letters, ctx) != \
                        combing._comb_letters(m, (u * v).letters, ctx):
                    ok = False
                    break
            rep.add(
                f"comb-welldef-m{m}",
                "inserting a relator does not change the combed form",
                True,
                ok,
            )
    for n in range(3, max_n + 1):
        gens = combing.ln_generators(n)
        rep.add(
            f"ln-gens-killed-n{n}",
            "restricted mod-2 map kills the torsion-free generators",
            True,
            all(_zero(homs.iota_hat(n - 2, g)) for g in gens),
        )
        images = {homs.iota_hat(n - 2, Word.of(gen_rho(j))) for j in range(3, n + 1)}
        expected = {
            tuple(1 if t == k else 0 for t in range(n - 2)) for k in range(n - 2)
        }
        rep.add(
            f"ln-index-n{n}",
            "surface letters hit every standard basis vector (index 2^(n-2))",
            True,
            images == expected,
        )
        rep.add(
            f"tower-ranks-n{n}",
            "tower rank lists match the closed forms",
            str(([j for j in range(n - 1, 1, -1)],
                 [2 * j - 1 for j in range(n - 1, 1, -1)])),
            str((combing.gamma_tower_ranks(n), combing.ln_tower_ranks(n))),
        )
    return rep


def abelianizations_suite(max_n: int, rng: random.Random) -> VerificationReport:
    rep = VerificationReport("abelianizations", max_n)
    for n in range(1, max_n + 1):
        inv = abelian.abelianize_presentation(presentations.build_pn_rp2(n))
        rep.add(
            f"pn-ab-n{n}",
            f"abelianization of the {n}-strand projective-plane group",
            str(abelian.AbelianInvariants(0, tuple([2] * n))),
            str(inv),
        )
    for m in range(1, max(0, max_n - 2) + 1):
        via_pres = abelian.abelianize_presentation(presentations.build_gamma_rp2(m, 2))
        via_tower = abelian.gamma_tower_abelianization(m)
        rep.add(
            f"gamma-ab-two-routes-m{m}",
            "presentation and tower abelianizations agree",
            f"{abelian.AbelianInvariants(2 * m)} == {abelian.AbelianInvariants(2 * m)}",
            f"{via_pres} == {via_tower}",
        )
    for l in range(3, max_n + 1):
        rep.add(
            f"delta-omega-l{l}",
            "coinvariants of the level free kernel",
            str(abelian.AbelianInvariants(2)),
            str(abelian.omega_delta(l)),
        )
        rep.add(
            f"delta-keromega-l{l}",
            "coinvariants of the index-2 kernel factor",
            str(abelian.AbelianInvariants(2 * l - 1)),
            str(abelian.keromega_delta(l)),
        )
    for l in range(2, 5):
        for m in range(1, 4):
            rep.add(
                f"fn-coinv-rp2-m{m}-l{l}",
                "strand-forgetting kernel coinvariants, projective plane",
                str(abelian.AbelianInvariants(l)),
                str(abelian.fn_kernel_coinvariants("rp2", m, l)),
            )
    for l in range(3, 5):
        for m in range(1, 4):
            rep.add(
                f"fn-coinv-s2-m{m}-l{l}",
                "strand-forgetting kernel coinvariants, sphere",
                str(abelian.AbelianInvariants(m + l - 1)),
                str(abelian.fn_kernel_coinvariants("s2", m, l)),
            )
    return rep


def towers_suite(max_n: int, rng: random.Random) -> VerificationReport:
    rep = VerificationReport("towers", max_n)
    for m in range(1, max(0, max_n - 2) + 1):
        rep.add(
            f"gamma-tower-m{m}",
            "tower abelianization of the two-puncture group",
            str(abelian.AbelianInvariants(2 * m)),
            str(abelian.gamma_tower_abelianization(m)),
        )
    for n in range(3, max_n + 1):
        rep.add(
            f"ln-tower-n{n}",
            "tower abelianization of the torsion-free complement",
            str(abelian.AbelianInvariants(n * (n - 2))),
            str(abelian.ln_tower_abelianization(n)),
        )
    return rep


def counts_suite(max_n: int, rng: random.Random) -> VerificationReport:
    rep = VerificationReport("counts", max_n)
    for n in range(3, max_n + 1):
        exponent = abelian.subgroup_count_exponent(n)
        rep.add(
            f"count-exponent-n{n}",
            f"n={n}: exponent {exponent}, count {2 ** exponent}",
            n * (n - 2),
            exponent,
        )
    return rep


def vcd_suite(max_n: int, rng: random.Random) -> VerificationReport:
    rep = VerificationReport("vcd", max_n)
    for n in range(3, max_n + 1):
        rep.add(
            f"vcd-rp2-n{n}",
            f"RP2 n={n}",
            n - 2,
            abelian.vcd_report("rp2", n),
        )
    for n in range(4, max_n + 1):
        rep.add(
            f"vcd-s2-n{n}",
            f"S2 n={n}",
            n - 3,
            abelian.vcd_report("s2", n),
        )
    return rep


SUITES: dict[str, Callable[[int, random.Random], VerificationReport]] = {
    "presentations": presentations_suite,
    "combing": combing_suite,
    "abelianizations": abelianizations_suite,
    "towers": towers_suite,
    "counts": counts_suite,
    "vcd": vcd_suite,
}


def run_suite(name: str, max_n: int = DEFAULT_MAX_N,
              seed: int = DEFAULT_SEED) -> list[VerificationReport]:
    """Run one suite (or ``all``) and return its reports."""
    if not 1 <= max_n <= DESK_SCALE_BOUND:
        raise ValueError(f"max-n must be between 1 and {DESK_SCALE_BOUND}")
    rng = random.Random(seed)
    if name == "all":
        return [suite(max_n, rng) for suite in SUITES.values()]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return [SUITES[name](max_n, rng)]
