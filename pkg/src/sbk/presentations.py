"""Finite presentations of the three group families, built as data.

Families (parameters are strand counts ``>= 1`` throughout):

* ``pn-rp2``    -- the pure braid group of the projective plane on n
  strands, on the band generators ``A[i,j]`` and the surface generators
  ``tau[k]``;
* ``gamma-rp2`` -- the pure braid group of the projective plane with p
  punctures on m strands, on ``A[i,j]`` / ``rho[j]`` with strand labels
  ``p+1 .. m+p``;
* ``gamma-s2``  -- the pure braid group of the sphere with m punctures
  on n strands, on ``A[i,j]`` with strand labels ``m+1 .. m+n``.

Relations with right-hand sides are stored as single relator words
``lhs * rhs^-1``, canonically reduced, with the convention that a
relator equals the identity.  The conjugation case analysis for the
band generators is implemented once (:func:`artin_conjugate`) and is
shared with the action tables of :mod:`sbk.combing`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .words import (
    Gen,
    Letter,
    Word,
    concat_letters,
    format_gen,
    gen_a,
    gen_rho,
    gen_tau,
    invert_letters,
)

FAMILY_PN_RP2 = "pn-rp2"
FAMILY_GAMMA_RP2 = "gamma-rp2"
FAMILY_GAMMA_S2 = "gamma-s2"


@dataclass(frozen=True)
class Presentation:
    family: str
    params: tuple[tuple[str, int], ...]
    generators: tuple[Gen, ...]
    relators: tuple[Word, ...]

    def param(self, name: str) -> int:
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": dict(self.params),
            "generators": [format_gen(g) for g in self.generators],
            "relators": [str(r) for r in self.relators],
        }


def artin_case(r: int, s: int, i: int, j: int) -> str:
    """Classify the conjugation of A[i,j] by A[r,s]; requires s < j.

    The four shapes: "disjoint" (the index pairs do not interleave),
    "lower" (i = r), "upper" (i = s) and "linked" (r < i < s).
    """
    if not (1 <= r < s and 1 <= i < j and s < j):
        raise ValueError(f"invalid band conjugation indices ({r},{s}),({i},{j})")
    if i < r or i > s:
        return "disjoint"
    if i == r:
        return "lower"
    if i == s:
        return "upper"
    return "linked"


def artin_conjugate(r: int, s: int, i: int, j: int) -> tuple[Letter, ...]:
    """The word equal to ``A[r,s] A[i,j] A[r,s]^-1`` over band generators."""
    case = artin_case(r, s, i, j)
    b = gen_a(i, j)
    if case == "disjoint":
        return ((b, 1),)
    u = gen_a(r, j)
    v = gen_a(s, j)
    if case == "lower":
        return ((v, -1), (b, 1), (v, 1))
    if case == "upper":
        return ((v, -1), (u, -1), (v, 1), (u, 1), (v, 1))
    return (
        (v, -1), (u, -1), (v, 1), (u, 1),
        (b, 1),
        (u, -1), (v, -1), (u, 1), (v, 1),
    )


def artin_conjugate_inv(r: int, s: int, i: int, j: int) -> tuple[Letter, ...]:
    """The word equal to ``A[r,s]^-1 A[i,j] A[r,s]``.

    These closed forms are the inverses of :func:`artin_conjugate`; the
    pairing is certified by the action-table round-trip checks.
    """
    case = artin_case(r, s, i, j)
    b = gen_a(i, j)
    if case == "disjoint":
        return ((b, 1),)
    u = gen_a(r, j)
    v = gen_a(s, j)
    if case == "lower":
        return ((u, 1), (v, 1), (u, 1), (v, -1), (u, -1))
    if case == "upper":
        return ((u, 1), (v, 1), (u, -1))
    return (
        (u, 1), (v, 1), (u, -1), (v, -1),
        (b, 1),
        (v, 1), (u, 1), (v, -1), (u, -1),
    )


def cln_letters(i: int, j: int) -> tuple[Letter, ...]:
    """The reflected band element C[i,j] over the generators A[.,j]."""
    if not 1 <= i < j:
        raise ValueError(f"C[{i},{j}] requires 1 <= i < j")
    head = [(gen_a(t, j), -1) for t in range(j - 1, i, -1)]
    tail = [(gen_a(t, j), 1) for t in range(i + 1, j)]
    return tuple(head + [(gen_a(i, j), 1)] + tail)


def _relator(*parts: Sequence[Letter]) -> Word:
    return Word.from_letters(concat_letters(*parts))


def _artin_relators(pairs) -> list[Word]:
    out = []
    for (r, s), (i, j) in pairs:
        lhs = ((gen_a(r, s), 1), (gen_a(i, j), 1), (gen_a(r, s), -1))
        out.append(_relator(lhs, invert_letters(artin_conjugate(r, s, i, j))))
    return out


def _band_pairs(gens: Sequence[tuple[int, int]]):
    """Ordered pairs of band generator indices with s < j (one per relation)."""
    for (i, j) in gens:
        for (r, s) in gens:
            if s < j:
                yield (r, s), (i, j)


def build_pn_rp2(n: int) -> Presentation:
    """Presentation of the n-strand pure braid group of the projective plane."""
    if n < 1:
        raise ValueError("n must be >= 1")
    bands = [(i, j) for j in range(2, n + 1) for i in range(1, j)]
    generators = tuple(gen_a(i, j) for (i, j) in sorted(bands)) + tuple(
        gen_tau(k) for k in range(1, n + 1)
    )
    relators: list[Word] = []
    relators += _artin_relators(_band_pairs(bands))
    # tau_i tau_j tau_i^-1 = tau_j^-1 A[i,j]^-1 tau_j^2
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ti, tj, a = gen_tau(i), gen_tau(j), gen_a(i, j)
            relators.append(_relator(
                ((ti, 1), (tj, 1), (ti, -1)),
                ((tj, -2), (a, 1), (tj, 1)),
            ))
    # tau_i^2 = A[1,i] ... A[i-1,i] A[i,i+1] ... A[i,n]
    for i in range(1, n + 1):
        rhs = [(gen_a(k, i), 1) for k in range(1, i)]
        rhs += [(gen_a(i, k), 1) for k in range(i + 1, n + 1)]
        relators.append(_relator(((gen_tau(i), 2),), invert_letters(rhs)))
    # tau_k A[i,j] tau_k^-1, k != j
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            a, tj = gen_a(i, j), gen_tau(j)
            for k in range(1, n + 1):
                if k == j:
                    continue
                if k < i or k > j:
                    rhs = ((a, 1),)
                elif k == i:
                    rhs = ((tj, -1), (a, -1), (tj, 1))
                else:  # i < k < j
                    akj = gen_a(k, j)
                    rhs = (
                        (tj, -1), (akj, -1), (tj, 1), (akj, -1),
                        (a, 1),
                        (akj, 1), (tj, -1), (akj, 1), (tj, 1),
                    )
                relators.append(_relator(
                    ((gen_tau(k), 1), (a, 1), (gen_tau(k), -1)),
                    invert_letters(rhs),
                ))
    return Presentation(
        family=FAMILY_PN_RP2,
        params=(("n", n),),
        generators=generators,
        relators=tuple(relators),
    )


def build_gamma_rp2(m: int, p: int) -> Presentation:
    """Presentation of the m-strand pure braid group of the projective
    plane with p punctures, strand labels p+1 .. m+p."""
    if m < 1 or p < 1:
        raise ValueError("m and p must be >= 1")
    top = m + p
    bands = [(i, j) for j in range(p + 1, top + 1) for i in range(1, j)]
    generators: list[Gen] = []
    for j in range(p + 1, top + 1):
        generators += [gen_a(i, j) for i in range(1, j)]
        generators.append(gen_rho(j))
    relators: list[Word] = []
    relators += _artin_relators(_band_pairs(bands))
    # A[i,j] rho_k A[i,j]^-1 = rho_k for j < k
    for (i, j) in bands:
        for k in range(j + 1, top + 1):
            a, rk = gen_a(i, j), gen_rho(k)
            relators.append(_relator(((a, 1), (rk, 1), (a, -1), (rk, -1)),))
    # rho_k A[i,j] rho_k^-1 for p+1 <= k < j, with C expanded eagerly
    for (i, j) in bands:
        for k in range(p + 1, j):
            a, rk, rj = gen_a(i, j), gen_rho(k), gen_rho(j)
            if k < i:
                rhs: tuple[Letter, ...] = ((a, 1),)
            elif k == i:
                rhs = concat_letters(
                    ((rj, -1),), invert_letters(cln_letters(i, j)), ((rj, 1),)
                )
            else:
                c = cln_letters(k, j)
                rhs = concat_letters(
                    ((rj, -1),), invert_letters(c), ((rj, 1),),
                    ((a, 1),),
                    ((rj, -1),), c, ((rj, 1),),
                )
            relators.append(_relator(
                ((rk, 1), (a, 1), (rk, -1)), invert_letters(rhs)
            ))
    # rho_k rho_j rho_k^-1 = C[k,j] rho_j for p+1 <= k < j
    for j in range(p + 1, top + 1):
        for k in range(p + 1, j):
            rk, rj = gen_rho(k), gen_rho(j)
            rhs = concat_letters(cln_letters(k, j), ((rj, 1),))
            relators.append(_relator(
                ((rk, 1), (rj, 1), (rk, -1)), invert_letters(rhs)
            ))
    # rho_j (prod_{i<j} A[i,j]) rho_j = prod_{l>j} A[j,l]
    for j in range(p + 1, top + 1):
        rj = gen_rho(j)
        lhs = [(rj, 1)] + [(gen_a(i, j), 1) for i in range(1, j)] + [(rj, 1)]
        rhs = [(gen_a(j, l), 1) for l in range(j + 1, top + 1)]
        relators.append(_relator(lhs, invert_letters(rhs)))
    return Presentation(
        family=FAMILY_GAMMA_RP2,
        params=(("m", m), ("p", p)),
        generators=tuple(generators),
        relators=tuple(relators),
    )


def build_gamma_s2(n: int, m: int) -> Presentation:
    """Presentation of the n-strand pure braid group of the sphere with
    m punctures, strand labels m+1 .. m+n."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    top = m + n
    bands = [(i, j) for j in range(m + 1, top + 1) for i in range(1, j)]
    generators = tuple(gen_a(i, j) for (i, j) in bands)
    relators: list[Word] = []
    relators += _artin_relators(_band_pairs(bands))
    for j in range(m + 1, top + 1):
        letters = [(gen_a(i, j), 1) for i in range(1, j)]
        letters += [(gen_a(j, k), 1) for k in range(j + 1, top + 1)]
        relators.append(_relator(letters))
    return Presentation(
        family=FAMILY_GAMMA_S2,
        params=(("n", n), ("m", m)),
        generators=generators,
        relators=tuple(relators),
    )


@dataclass(frozen=True)
class HomSpec:
    """A homomorphism out of a presented group, for relator checking."""

    name: str
    apply: Callable[[Word], Any]
    is_identity: Callable[[Any], bool]
    render: Callable[[Any], str] = field(default=str)


@dataclass(frozen=True)
class RelatorReport:
    presentation: Presentation
    hom_name: str
    cases: tuple[tuple[str, str, bool], ...]  # (relator, image, passed)

    @property
    def passed(self) -> bool:
        return all(ok for _, _, ok in self.cases)


def verify_relators(pres: Presentation, hom: HomSpec) -> RelatorReport:
    """Evaluate the homomorphism on every relator; passes iff all images
    are the identity of the target."""
    gens = set(pres.generators)
    cases = []
    for rel in pres.relators:
        for gen, _ in rel.letters:
            if gen not in gens:
                raise AlphabetMismatch(
                    f"relator letter {format_gen(gen)} outside the generator list"
                )
        image = hom.apply(rel)
        cases.append((str(rel), hom.render(image), hom.is_identity(image)))
    return RelatorReport(pres, hom.name, tuple(cases))


class AlphabetMismatch(ValueError):
    pass
