"""q-periodic arithmetical functions and their discrete Fourier transforms.

Everything downstream consumes these coefficient functions: residues are
indexed 1..q, with residue q standing for 0 mod q (the paper-style sum
"a mod q" never fixes representatives, so we do).  The module also builds
the full Dirichlet character table mod r, decomposes a coprime-supported
periodic function into characters, and handles the two-term Dirichlet
polynomial that factors out of the period-2 case.
"""

from __future__ import annotations

import cmath
import enum
import json
import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

PARITY_TOL = 1e-12
_TWO_PI = 2.0 * math.pi


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    NEITHER = "neither"


class SupportError(ValueError):
    """The periodic function is nonzero on a residue not coprime to its period."""


class DegenerateError(ValueError):
    """An operation was asked for a parameter choice where it collapses."""


def _e(z: complex) -> complex:
    """exp(2*pi*i*z)."""
    return cmath.exp(2j * math.pi * z)


@dataclass(frozen=True)
class PeriodicFunction:
    """A q-periodic complex-valued function on the integers.

    values[i] is the value at residue i+1; the extension to all of Z is by
    periodicity.  Construct through new_periodic so parity gets detected.
    """

    q: int
    values: tuple[complex, ...]
    parity: Parity

    def __call__(self, n: int) -> complex:
        return self.values[(n - 1) % self.q]

    @property
    def is_zero(self) -> bool:
        return all(abs(v) <= PARITY_TOL for v in self.values)

    @property
    def delta(self) -> int:
        """+1 for even, -1 for odd; raises for parity NEITHER."""
        if self.parity is Parity.EVEN:
            return +1
        if self.parity is Parity.ODD:
            return -1
        raise DegenerateError("function has no definite parity")

    @property
    def max_abs(self) -> float:
        return max(abs(v) for v in self.values)

    def conjugate(self) -> "PeriodicFunction":
        return new_periodic(self.q, [v.conjugate() for v in self.values])

    def to_json(self) -> str:
        return json.dumps(
            {"q": self.q,
             "re": [v.real for v in self.values],
             "im": [v.imag for v in self.values]},
            sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "PeriodicFunction":
        obj = json.loads(text)
        q = int(obj["q"])
        re, im = obj["re"], obj["im"]
        if len(re) != q or len(im) != q:
            raise ValueError("re/im arrays must both have length q")
        return new_periodic(q, [complex(a, b) for a, b in zip(re, im)])


def new_periodic(q: int, values: Sequence[complex]) -> PeriodicFunction:
    """Build a q-periodic function from its values on residues 1..q."""
    if q < 1:
        raise ValueError(f"period must be a positive integer, got {q}")
    vals = tuple(complex(v) for v in values)
    if len(vals) != q:
        raise ValueError(f"expected {q} values, got {len(vals)}")
    return PeriodicFunction(q=q, values=vals, parity=_detect_parity(q, vals))


def _detect_parity(q: int, vals: tuple[complex, ...]) -> Parity:
    # f(-n) lives at residue index (-n-1) mod q.  The all-zero function is
    # accepted and classified as even; callers needing f != 0 must check.
    even = all(abs(vals[i] - vals[(-i - 2) % q]) <= PARITY_TOL for i in range(q))
    if even:
        return Parity.EVEN
    odd = all(abs(vals[i] + vals[(-i - 2) % q]) <= PARITY_TOL for i in range(q))
    return Parity.ODD if odd else Parity.NEITHER


def dft(f: PeriodicFunction, sign: int = +1) -> PeriodicFunction:
    """Discrete Fourier transform: (1/sqrt(q)) sum_a f(a) e(+-a*n/q).

    Applying it twice with sign +1 recovers delta * f for even/odd f
    (Fourier inversion), and it preserves parity.
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    q = f.q
    scale = 1.0 / math.sqrt(q)
    out = []
    for n in range(1, q + 1):
        acc = 0j
        for a in range(1, q + 1):
            acc += f.values[a - 1] * _e(sign * a * n / q)
        out.append(scale * acc)
    return new_periodic(q, out)


def residue_at_one(f: PeriodicFunction) -> complex:
    """Residue of the attached Dirichlet series at s = 1: the mean of f."""
    return sum(f.values) / f.q


# ---------------------------------------------------------------------------
# Dirichlet characters

def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def euler_phi(n: int) -> int:
    out = 1
    for p, e in _factorize(n):
        out *= (p - 1) * p ** (e - 1)
    return out


def _primitive_root(pe: int, p: int) -> int:
    # smallest primitive root mod p^e for odd p (deterministic)
    phi = euler_phi(pe)
    factors = [f for f, _ in _factorize(phi)]
    for g in range(2, pe):
        if math.gcd(g, pe) != 1:
            continue
        if all(pow(g, phi // f, pe) != 1 for f in factors):
            return g
    raise RuntimeError(f"no primitive root mod {pe}")  # unreachable for odd p^e


def _unit_group_components(r: int) -> list[tuple[int, int, int]]:
    """Cyclic components of (Z/rZ)* as (prime_power, generator, order).

    Odd prime powers are cyclic; 2^k splits as <-1> x <3> for k >= 3.
    """
    comps = []
    for p, e in _factorize(r):
        pe = p ** e
        if p == 2:
            if e == 1:
                continue  # trivial group
            if e == 2:
                comps.append((4, 3, 2))
            else:
                comps.append((pe, pe - 1, 2))
                comps.append((pe, 3, pe // 4))
        else:
            comps.append((pe, _primitive_root(pe, p), p ** (e - 1) * (p - 1)))
    return comps


@dataclass(frozen=True)
class DirichletCharacter:
    """One Dirichlet character mod `modulus`, tabulated on residues 1..modulus."""

    modulus: int
    values: tuple[complex, ...]
    is_principal: bool
    index: int  # position in the canonical table ordering

    def __call__(self, n: int) -> complex:
        return self.values[(n - 1) % self.modulus]

    @property
    def delta(self) -> int:
        """Parity sign chi(-1), always +1 or -1."""
        v = self(-1)
        return +1 if abs(v - 1) < 0.5 else -1

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(self.modulus,
                                  tuple(v.conjugate() for v in self.values),
                                  self.is_principal, self.index)

    def as_periodic(self) -> PeriodicFunction:
        return new_periodic(self.modulus, self.values)


def character_table(r: int) -> list[DirichletCharacter]:
    """All phi(r) Dirichlet characters mod r, in a deterministic order.

    Characters are products of characters of the cyclic components of
    (Z/rZ)*, enumerated lexicographically in the component exponents;
    the principal character always comes first.
    """
    if r < 1:
        raise ValueError(f"modulus must be a positive integer, got {r}")
    comps = _unit_group_components(r)
    # discrete logs per component, to evaluate at each residue
    logtables = []
    for pe, g, d in comps:
        table = {}
        x = 1
        for j in range(d):
            # for 2^k with k >= 3 the two sub-components overlap in modulus pe;
            # resolve jointly below instead
            table[x] = j
            x = (x * g) % pe
        logtables.append((pe, d, table))
    # joint logs for 2^k, k >= 3 (components share pe): rebuild pairwise
    joint: dict[int, dict[int, tuple[int, ...]]] = {}
    chars: list[DirichletCharacter] = []
    orders = [d for _, _, d in comps]
    for idx, exps in enumerate(product(*[range(d) for d in orders])):
        vals = []
        for n in range(1, r + 1):
            if math.gcd(n, r) != 1:
                vals.append(0j)
                continue
            angle = 0.0
            pos = 0
            while pos < len(comps):
                pe, g, d = comps[pos]
                if pos + 1 < len(comps) and comps[pos + 1][0] == pe:
                    # the 2^k >= 8 pair: n = (-1)^x * 3^y mod pe
                    d2 = comps[pos + 1][2]
                    key = pe
                    if key not in joint:
                        tab = {}
                        for x in range(2):
                            for y in range(d2):
                                u = (pow(pe - 1, x, pe) * pow(3, y, pe)) % pe
                                tab[u] = (x, y)
                        joint[key] = tab
                    x, y = joint[key][n % pe]
                    angle += exps[pos] * x / 2 + exps[pos + 1] * y / d2
                    pos += 2
                else:
                    _, _, table = logtables[pos]
                    angle += exps[pos] * table[n % pe] / d
                    pos += 1
            vals.append(_e(angle))
        chars.append(DirichletCharacter(
            modulus=r, values=tuple(vals),
            is_principal=all(e == 0 for e in exps), index=idx))
    return chars


@dataclass(frozen=True)
class CharacterDecomposition:
    """Coefficients c_i of psi = sum_i c_i chi_i over the characters mod r."""

    modulus: int
    coefficients: tuple[complex, ...]
    characters: tuple[DirichletCharacter, ...]

    def recombine(self) -> PeriodicFunction:
        r = self.modulus
        vals = [sum(c * chi.values[i] for c, chi in
                    zip(self.coefficients, self.characters))
                for i in range(r)]
        return new_periodic(r, vals)


def character_decompose(psi: PeriodicFunction) -> CharacterDecomposition:
    """Expand psi over the characters mod its period.

    Requires psi to vanish on residues not coprime to the period; the
    expansion identity for the attached Dirichlet series only holds there.
    """
    r = psi.q
    for n in range(1, r + 1):
        if math.gcd(n, r) > 1 and abs(psi.values[n - 1]) > PARITY_TOL:
            raise SupportError(
                f"psi({n}) != 0 but gcd({n}, {r}) > 1; decomposition does not apply")
    chars = character_table(r)
    phi = len(chars)
    coeffs = tuple(
        sum(psi.values[n - 1] * chi.values[n - 1].conjugate()
            for n in range(1, r + 1)) / phi
        for chi in chars)
    return CharacterDecomposition(modulus=r, coefficients=coeffs,
                                  characters=tuple(chars))


# ---------------------------------------------------------------------------
# the period-2 factor P(s)

@dataclass(frozen=True)
class R2Factor:
    """The polynomial P(s) = psi(1) + (psi(2)-psi(1)) 2^(-s) of a 2-periodic psi.

    P(s)*zeta(s) equals the Dirichlet series of psi everywhere.  Its zeros,
    when psi(1) != 0, form the vertical progression
        s = [Log(1 - psi(2)/psi(1)) + 2k*pi*i] / log 2,
    i.e. zero_base + k*zero_period.  (Solving P = 0 directly produces the
    division by log 2; see the decisions ledger for the discrepancy with the
    excluded set quoted elsewhere.)
    """

    psi1: complex
    psi2: complex
    zero_base: complex | None  # None when P has no zeros
    zero_period: complex

    def __call__(self, s: complex) -> complex:
        return self.psi1 + (self.psi2 - self.psi1) * 2.0 ** (-s) if not isinstance(s, complex) \
            else self.psi1 + (self.psi2 - self.psi1) * cmath.exp(-s * math.log(2.0))

    def zeros_near(self, t_lo: float, t_hi: float) -> list[complex]:
        """All zeros with imaginary part in [t_lo, t_hi]."""
        if self.zero_base is None:
            return []
        per = self.zero_period.imag
        k_lo = math.ceil((t_lo - self.zero_base.imag) / per)
        k_hi = math.floor((t_hi - self.zero_base.imag) / per)
        return [self.zero_base + k * self.zero_period for k in range(k_lo, k_hi + 1)]


def r2_factor(psi: PeriodicFunction) -> R2Factor:
    """Extract P(s) from a 2-periodic psi with psi(1) != psi(2)."""
    if psi.q != 2:
        raise ValueError(f"expected period 2, got {psi.q}")
    p1, p2 = psi.values
    if abs(p1 - p2) <= PARITY_TOL:
        raise DegenerateError("psi(1) = psi(2): P is constant, case reduces to period 1")
    if abs(p1) <= PARITY_TOL:
        zero_base = None  # P(s) = psi(2) 2^(-s) never vanishes
    else:
        w = 1.0 - p2 / p1
        zero_base = cmath.log(w) / math.log(2.0)
    return R2Factor(psi1=p1, psi2=p2, zero_base=zero_base,
                    zero_period=2j * math.pi / math.log(2.0))
