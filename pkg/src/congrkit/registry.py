"""Catalogue of every registered check family.

Each family bundles a display anchor, a generator for its default parameter
grid, and a runner that executes one instance from a plain parameter
dictionary.  Grids are deterministic, including the randomized framework
sweeps, so repeated runs enumerate identical instances in identical order;
``run_instance`` takes only picklable arguments and is safe to fan out
across worker processes.

Range overrides are passed as a bounds mapping with keys ``max_n``,
``max_p`` and ``max_m``.  Grids consume the bounds they understand and
ignore the rest; the randomized framework sweeps are fixed and ignore
overrides entirely.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import qalgebra, sequences, verify
from .exactnum import primes_up_to
from .kernels import PAPER_KERNELS, KernelSpec
from .result import CheckResult
from .verify import kernel_descriptor, kernel_from_descriptor

__all__ = [
    "Family",
    "FAMILIES",
    "GROUPS",
    "family_names",
    "get_family",
    "instances_for",
    "run_instance",
    "run_pair",
    "all_jobs",
]

_SEED = 20260815


def _cap(bounds: dict, key: str, default: int) -> int:
    value = bounds.get(key)
    return default if value is None else value


def _odd_primes(limit: int) -> list[int]:
    return [p for p in primes_up_to(limit) if p % 2]


# -- sequence recurrences -------------------------------------------------------


def _grid_rec_r(bounds: dict) -> list[dict]:
    return [{"n_max": _cap(bounds, "max_n", 200)}]


def _grid_rec_r_poly(bounds: dict) -> list[dict]:
    return [{"n_max": _cap(bounds, "max_n", 100)}]


def _grid_rec_s(bounds: dict) -> list[dict]:
    return [{"n_max": _cap(bounds, "max_n", 200)}]


# -- fixed congruence and identity grids ----------------------------------------


def _grid_thm11(bounds: dict) -> list[dict]:
    return [{"p": p} for p in _odd_primes(_cap(bounds, "max_p", 1999))]


def _grid_thm12(bounds: dict) -> list[dict]:
    return [{"p": p} for p in _odd_primes(_cap(bounds, "max_p", 997))]


def _grid_remark11(bounds: dict) -> list[dict]:
    top = _cap(bounds, "max_n", 20)
    return [{"n": n, "d": d} for n in range(top + 1) for d in range(n + 1)]


def _grid_thm13(bounds: dict) -> list[dict]:
    return [{"p": p} for p in _odd_primes(_cap(bounds, "max_p", 997))]


def _grid_thm13ii(bounds: dict) -> list[dict]:
    return [{"n": n} for n in range(1, _cap(bounds, "max_n", 500) + 1)]


def _grid_thm14i(bounds: dict) -> list[dict]:
    return [{"n": n} for n in range(1, _cap(bounds, "max_n", 300) + 1)]


def _grid_thm14ii(bounds: dict) -> list[dict]:
    return [{"p": p} for p in primes_up_to(_cap(bounds, "max_p", 499)) if p >= 5]


def _grid_thm15i(bounds: dict) -> list[dict]:
    top = _cap(bounds, "max_n", 60)
    mtop = _cap(bounds, "max_m", 3)
    # variant innermost: consecutive instances share the cached product grid
    return [
        {"m": m, "n": n, "variant": variant}
        for m in range(1, mtop + 1)
        for n in range(1, top + 1)
        for variant in verify.THM15_VARIANTS
    ]


def _grid_thm15ii(bounds: dict) -> list[dict]:
    top = _cap(bounds, "max_n", 60)
    return [
        {"n": n, "a": a, "b": b}
        for n in range(1, top + 1)
        for a in range(1, 4)
        for b in range(1, 4)
    ]


def _grid_remark13(bounds: dict) -> list[dict]:
    return [{"n": n} for n in range(1, _cap(bounds, "max_n", 100) + 1)]


def _grid_cor11(bounds: dict) -> list[dict]:
    return [{"n": n} for n in range(1, _cap(bounds, "max_n", 150) + 1)]


def _grid_lemma22(bounds: dict) -> list[dict]:
    return [{"n": n} for n in range(_cap(bounds, "max_n", 50) + 1)]


def _grid_lemma23(bounds: dict) -> list[dict]:
    top = _cap(bounds, "max_n", 50)
    return [{"n": n, "k": k} for n in range(1, top + 1) for k in range(1, n + 1)]


# -- randomized framework sweeps -------------------------------------------------


def _poly_body(rng: random.Random, degree: int, bound: int = 3) -> tuple[int, ...]:
    while True:
        coeffs = tuple(rng.randint(-bound, bound) for _ in range(degree + 1))
        if any(coeffs):
            return coeffs


def _scaled_lists(rng: random.Random, d0: int, m: int) -> tuple[list[int], list[int]]:
    # entries are multiples of d0 so the shared gcd is usually nontrivial
    alphas = list(range(1, 4 // d0 + 1))
    a_list = [d0 * rng.choice(alphas) * rng.choice((-1, 1)) for _ in range(m)]
    b_list = [d0 * rng.randint(0, 3 // d0) for _ in range(m)]
    return a_list, b_list


def _grid_thm41(bounds: dict) -> list[dict]:
    rng = random.Random("thm41-%d" % _SEED)
    out = []
    for i in range(100):
        d0 = rng.choice((1, 2, 3, 4))
        m = rng.randint(1, 3)
        n = d0 * rng.randint(1, 40 // d0)
        a_list, b_list = _scaled_lists(rng, d0, m)
        shift = rng.choice((1, 2))
        kern = KernelSpec(
            name="w%02d" % i,
            sign=rng.choice(("none", "k")),
            num=(0,) * shift + _poly_body(rng, 2),
        )
        out.append(
            {
                "n": n,
                "a_list": a_list,
                "b_list": b_list,
                "kernel": kernel_descriptor(kern),
            }
        )
    return out


def _grid_cor41(bounds: dict) -> list[dict]:
    rng = random.Random("cor41-%d" % _SEED)
    out = []
    for _ in range(100):
        d0 = rng.choice((1, 2, 3, 4))
        m = rng.randint(1, 3)
        n = d0 * rng.randint(1, 40 // d0)
        a_list, b_list = _scaled_lists(rng, d0, m)
        out.append({"n": n, "a_list": a_list, "b_list": b_list})
    return out


def _grid_thm42(bounds: dict) -> list[dict]:
    rng = random.Random("thm42-%d" % _SEED)
    out = []
    for i in range(100):
        m = rng.randint(1, 3)
        n = rng.randint(1, 40)
        a_list = [rng.randint(1, 4) * rng.choice((-1, 1)) for _ in range(m)]
        kern = KernelSpec(
            name="w%02d" % i,
            sign=rng.choice(("none", "k")),
            num=(0, 0, 0) + _poly_body(rng, 2),
        )
        out.append({"n": n, "a_list": a_list, "kernel": kernel_descriptor(kern)})
    return out


def _grid_thm43(bounds: dict) -> list[dict]:
    rng = random.Random("thm43-%d" % _SEED)
    out = []
    for i in range(100):
        n = rng.randint(1, 40)
        a_list = [1] + sorted(rng.randint(1, 4) for _ in range(rng.randint(0, 2)))
        strength = rng.choice(("integral", "over_n"))
        body = _poly_body(rng, 2)
        den_kind = rng.choice(("odd", "catalan", "central"))
        if den_kind == "odd":
            den, central = (-1, 2), False
        elif den_kind == "catalan":
            # the central/(k+1) ratio is only half-integral, so double up
            den, central = (1, 1), False
            body = tuple(2 * c for c in body)
        else:
            den, central = (1,), True
        num = body if strength == "integral" else (0,) + body
        kern = KernelSpec(
            name="w%02d" % i,
            sign=rng.choice(("none", "k")),
            num=num,
            den=den,
            central_den=central,
        )
        out.append(
            {
                "n": n,
                "a_list": a_list,
                "strength": strength,
                "kernel": kernel_descriptor(kern),
            }
        )
    return out


def _grid_thm44(bounds: dict) -> list[dict]:
    rng = random.Random("thm44-%d" % _SEED)
    pool = ("f5", "f6", "f7", "f8", "f9", "f10")
    out = []
    for i in range(100):
        n = rng.randint(1, 40)
        a = rng.randint(1, 3)
        b = rng.randint(1, 3)
        if rng.random() < 0.5:
            kern = PAPER_KERNELS[rng.choice(pool)]
        else:
            kern = KernelSpec(
                name="w%02d" % i,
                sign=rng.choice(("none", "k", "km", "k(m-1)")),
                num=_poly_body(rng, 2),
                central_den=True,
            )
        out.append({"n": n, "a": a, "b": b, "kernel": kernel_descriptor(kern)})
    return out


def _grid_lemma42(bounds: dict) -> list[dict]:
    rng = random.Random("lemma42-%d" % _SEED)
    out = []
    for _ in range(60):
        n = rng.randint(1, 40)
        seq = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
        out.append(
            {"n": n, "a_seq": [[f.numerator, f.denominator] for f in seq]}
        )
    return out


# -- q-polynomial grids -----------------------------------------------------------


def _grid_qlucas(bounds: dict) -> list[dict]:
    return [
        {"a": a, "b": b, "s": s, "t": t, "d": d}
        for d in range(1, 7)
        for a in range(7)
        for b in range(7)
        for s in range(d)
        for t in range(d)
    ]


def _grid_lemma32(bounds: dict) -> list[dict]:
    top = _cap(bounds, "max_n", 30)
    return [
        {"n": n, "k": k}
        for n in range(2, top + 1)
        for k in range(n)
        if 2 * k < n - 1
    ]


def _grid_thm31q(bounds: dict) -> list[dict]:
    top = _cap(bounds, "max_n", 30)
    return [{"n": n, "k": k} for n in range(1, top + 1) for k in range(n)]


def _grid_thm32q(bounds: dict) -> list[dict]:
    top = _cap(bounds, "max_n", 20)
    out = []
    for n in range(1, top + 1):
        for a in range(3):
            for a_prime in (a - 1, a):
                if a_prime < 0:
                    continue
                for b in range(3):
                    out.append({"n": n, "a": a, "b": b, "a_prime": a_prime})
    return out


def _grid_conj57(bounds: dict) -> list[dict]:
    return [{"n": n} for n in range(1, _cap(bounds, "max_n", 25) + 1)]


def _grid_conj58q(bounds: dict) -> list[dict]:
    mtop = _cap(bounds, "max_m", 3)
    ntop = _cap(bounds, "max_n", 20)
    return [
        {"m": m, "n": n}
        for m in range(1, mtop + 1)
        for n in range(1, ntop + 1)
    ]


# -- open-question scans: grids delegate to the scan planner ----------------------

_SCAN_BOUND_KEYS = {
    "conj51": ("p_max",),
    "conj52": ("n_max",),
    "conj53": ("n_max",),
    "conj54": ("n_max", "p_max"),
    "conj55": ("n_max", "p_max"),
    "conj56": ("n_max",),
    "conj58i": ("m_max", "n_max"),
    "remark52": ("n_max",),
    "remark53": ("n_max",),
}

_BOUND_ALIASES = {"n_max": "max_n", "p_max": "max_p", "m_max": "max_m"}


def _scan_grid(selector: str) -> Callable[[dict], list[dict]]:
    def grid(bounds: dict) -> list[dict]:
        kwargs = {
            key: bounds.get(_BOUND_ALIASES[key])
            for key in _SCAN_BOUND_KEYS[selector]
        }
        return verify.scan_instances(selector, **kwargs)

    return grid


def _scan_runner(selector: str) -> Callable[[dict], CheckResult]:
    def run(params: dict) -> CheckResult:
        return verify.scan_run(selector, params)

    return run


# -- instance runners --------------------------------------------------------------


def _run_rec_r(params: dict) -> CheckResult:
    return sequences.check_recurrence_R(params["n_max"])


def _run_rec_r_poly(params: dict) -> CheckResult:
    return sequences.check_recurrence_R_poly(params["n_max"])


def _run_rec_s(params: dict) -> CheckResult:
    return sequences.check_recurrence_S(params["n_max"])


def _run_thm11(params: dict) -> CheckResult:
    return verify.check_thm11(params["p"])


def _run_thm12(params: dict) -> CheckResult:
    return verify.check_thm12(params["p"])


def _run_remark11(params: dict) -> CheckResult:
    return verify.check_remark11(params["n"], params["d"])


def _run_thm13(params: dict) -> CheckResult:
    return verify.check_thm13(params["p"])


def _run_thm13ii(params: dict) -> CheckResult:
    return verify.check_thm13_ii(params["n"])


def _run_thm14i(params: dict) -> CheckResult:
    return verify.check_thm14_i(params["n"])


def _run_thm14ii(params: dict) -> CheckResult:
    return verify.check_thm14_ii(params["p"])


def _run_thm15i(params: dict) -> CheckResult:
    return verify.check_thm15_i_grid(params["m"], params["n"], params["variant"])


def _run_thm15ii(params: dict) -> CheckResult:
    return verify.check_thm15_ii(params["n"], params["a"], params["b"])


def _run_remark13(params: dict) -> CheckResult:
    return verify.check_remark13(params["n"])


def _run_xval15(params: dict) -> CheckResult:
    return verify.check_xval15(params["n"], params["a"], params["b"])


def _run_cor11(params: dict) -> CheckResult:
    return verify.check_cor11(params["n"])


def _run_lemma22(params: dict) -> CheckResult:
    return verify.check_lemma22(params["n"])


def _run_lemma23(params: dict) -> CheckResult:
    return verify.check_lemma23(params["n"], params["k"])


def _run_thm41(params: dict) -> CheckResult:
    return verify.check_thm41(
        params["n"],
        kernel_from_descriptor(params["kernel"]),
        params["a_list"],
        params["b_list"],
    )


def _run_cor41(params: dict) -> CheckResult:
    return verify.check_cor41(params["n"], params["a_list"], params["b_list"])


def _run_thm42(params: dict) -> CheckResult:
    return verify.check_thm42(
        params["n"], kernel_from_descriptor(params["kernel"]), params["a_list"]
    )


def _run_thm43(params: dict) -> CheckResult:
    return verify.check_thm43(
        params["n"],
        kernel_from_descriptor(params["kernel"]),
        params["a_list"],
        params["strength"],
    )


def _run_thm44(params: dict) -> CheckResult:
    return verify.check_thm44(
        params["n"],
        params["a"],
        params["b"],
        kernel_from_descriptor(params["kernel"]),
    )


def _run_lemma42(params: dict) -> CheckResult:
    seq = [Fraction(num, den) for num, den in params["a_seq"]]
    return verify.check_lemma42(params["n"], seq)


def _run_remark52(params: dict) -> CheckResult:
    return verify.check_remark52(params["n"])


def _run_qlucas(params: dict) -> CheckResult:
    return qalgebra.check_q_lucas(
        params["a"], params["b"], params["s"], params["t"], params["d"]
    )


def _run_lemma32(params: dict) -> CheckResult:
    return qalgebra.check_lemma32(params["n"], params["k"])


def _run_thm31q(params: dict) -> CheckResult:
    return qalgebra.check_theorem31_q(params["n"], params["k"])


def _run_thm32q(params: dict) -> CheckResult:
    return qalgebra.check_theorem32_q(
        params["n"], params["a"], params["b"], params["a_prime"]
    )


def _run_conj57(params: dict) -> CheckResult:
    return qalgebra.check_conj57(params["n"])


def _run_conj58q(params: dict) -> CheckResult:
    return qalgebra.check_conj58_q(params["m"], params["n"])


def _pin_kind(pins: dict) -> dict:
    """Route explicit n/p pins to the divisibility or prime branch."""
    if "p" in pins:
        return {"kind": "prime", "p": pins["p"]}
    if "n" in pins:
        return {"kind": "divisibility", "n": pins["n"]}
    raise ValueError("need --n or --p")


@dataclass(frozen=True)
class Family:
    """One registered check family: anchor label, default grid, runner."""

    name: str
    group: str
    anchor: str
    grid: Callable[[dict], list[dict]]
    run: Callable[[dict], CheckResult]
    pins: tuple[str, ...] = ()
    pin_build: Optional[Callable[[dict], dict]] = None

    def instance_from_pins(self, pins: dict) -> dict:
        if not self.pins:
            raise ValueError(
                "family %s takes no explicit parameters; use range bounds" % self.name
            )
        unknown = sorted(set(pins) - set(self.pins))
        if unknown:
            raise ValueError(
                "family %s does not take: %s" % (self.name, ", ".join(unknown))
            )
        if self.pin_build:
            return self.pin_build(pins)
        missing = [key for key in self.pins if key not in pins]
        if missing:
            raise ValueError(
                "family %s also needs: %s" % (self.name, ", ".join(missing))
            )
        return {key: pins[key] for key in self.pins}


def _fam(
    name: str,
    group: str,
    anchor: str,
    grid: Callable[[dict], list[dict]],
    run: Callable[[dict], CheckResult],
    pins: tuple[str, ...] = (),
    pin_build: Optional[Callable[[dict], dict]] = None,
) -> tuple[str, Family]:
    return name, Family(name, group, anchor, grid, run, pins, pin_build)


FAMILIES: dict[str, Family] = dict(
    [
        _fam("rec_r", "sequences", "Recurrence (1.3)", _grid_rec_r, _run_rec_r),
        _fam(
            "rec_r_poly",
            "sequences",
            "Recurrence (1.5)",
            _grid_rec_r_poly,
            _run_rec_r_poly,
        ),
        _fam("rec_s", "sequences", "Recurrence (1.18)", _grid_rec_s, _run_rec_s),
        _fam(
            "thm11",
            "congruences",
            "Theorem 1.1 (1.6)-(1.11)",
            _grid_thm11,
            _run_thm11,
            ("p",),
        ),
        _fam(
            "thm12",
            "congruences",
            "Theorem 1.2 (1.12)",
            _grid_thm12,
            _run_thm12,
            ("p",),
        ),
        _fam(
            "remark11",
            "congruences",
            "Remark 1.1",
            _grid_remark11,
            _run_remark11,
            ("n", "d"),
        ),
        _fam(
            "thm13",
            "congruences",
            "Theorem 1.3 (1.13)",
            _grid_thm13,
            _run_thm13,
            ("p",),
        ),
        _fam(
            "thm13ii",
            "congruences",
            "Theorem 1.3 (1.14)/(1.15)",
            _grid_thm13ii,
            _run_thm13ii,
            ("n",),
        ),
        _fam(
            "thm14i",
            "congruences",
            "Theorem 1.4 (1.19)/(1.20)",
            _grid_thm14i,
            _run_thm14i,
            ("n",),
        ),
        _fam(
            "thm14ii",
            "congruences",
            "Theorem 1.4(ii)",
            _grid_thm14ii,
            _run_thm14ii,
            ("p",),
        ),
        _fam(
            "thm15i",
            "congruences",
            "Theorem 1.5(i) (1.21)-(1.26)",
            _grid_thm15i,
            _run_thm15i,
            ("n", "m", "variant"),
        ),
        _fam(
            "thm15ii",
            "congruences",
            "Theorem 1.5(ii) (1.27)-(1.35)",
            _grid_thm15ii,
            _run_thm15ii,
            ("n", "a", "b"),
        ),
        _fam(
            "remark13",
            "congruences",
            "Remark 1.3 (1.36)",
            _grid_remark13,
            _run_remark13,
            ("n",),
        ),
        _fam(
            "xval15",
            "congruences",
            "Theorem 1.5(ii) via Theorem 4.4 kernels",
            _grid_thm15ii,
            _run_xval15,
            ("n", "a", "b"),
        ),
        _fam(
            "cor11",
            "congruences",
            "Corollary 1.1 (1.37)/(1.38)",
            _grid_cor11,
            _run_cor11,
            ("n",),
        ),
        _fam(
            "lemma22",
            "congruences",
            "Lemma 2.2 (2.2)",
            _grid_lemma22,
            _run_lemma22,
            ("n",),
        ),
        _fam(
            "lemma23",
            "congruences",
            "Lemma 2.3 (2.6)",
            _grid_lemma23,
            _run_lemma23,
            ("n", "k"),
        ),
        _fam(
            "thm41",
            "framework",
            "Theorem 4.1 (4.1)/(4.2)",
            _grid_thm41,
            _run_thm41,
        ),
        _fam(
            "cor41",
            "framework",
            "Corollary 4.1 (4.4)-(4.8)",
            _grid_cor41,
            _run_cor41,
        ),
        _fam("thm42", "framework", "Theorem 4.2 (4.9)", _grid_thm42, _run_thm42),
        _fam(
            "thm43",
            "framework",
            "Theorem 4.3 (4.10)-(4.12)",
            _grid_thm43,
            _run_thm43,
        ),
        _fam("thm44", "framework", "Theorem 4.4 (4.14)", _grid_thm44, _run_thm44),
        _fam(
            "lemma42",
            "framework",
            "Lemma 4.2 (4.16)",
            _grid_lemma42,
            _run_lemma42,
        ),
        _fam(
            "qlucas",
            "q-analogues",
            "Lemma 3.1 (3.1)",
            _grid_qlucas,
            _run_qlucas,
            ("a", "b", "s", "t", "d"),
        ),
        _fam(
            "lemma32",
            "q-analogues",
            "Lemma 3.2 (3.2)",
            _grid_lemma32,
            _run_lemma32,
            ("n", "k"),
        ),
        _fam(
            "thm31q",
            "q-analogues",
            "Theorem 3.1 (3.3)/(3.4)",
            _grid_thm31q,
            _run_thm31q,
            ("n", "k"),
        ),
        _fam(
            "thm32q",
            "q-analogues",
            "Theorem 3.2 (3.7)/(3.8)",
            _grid_thm32q,
            _run_thm32q,
            ("n", "a", "b", "a_prime"),
        ),
        _fam(
            "conj57",
            "q-analogues",
            "Conjecture 5.7 (5.10)",
            _grid_conj57,
            _run_conj57,
            ("n",),
        ),
        _fam(
            "conj58q",
            "q-analogues",
            "Conjecture 5.8(ii) (5.13)/(5.14)",
            _grid_conj58q,
            _run_conj58q,
            ("m", "n"),
        ),
        _fam(
            "conj51",
            "conjectures",
            "Conjecture 5.1 (5.1)/(5.2)",
            _scan_grid("conj51"),
            _scan_runner("conj51"),
            ("p",),
        ),
        _fam(
            "conj52",
            "conjectures",
            "Conjecture 5.2 growth surrogates",
            _scan_grid("conj52"),
            _scan_runner("conj52"),
        ),
        _fam(
            "conj53",
            "conjectures",
            "Conjecture 5.3 irreducibility",
            _scan_grid("conj53"),
            _scan_runner("conj53"),
            ("n",),
        ),
        _fam(
            "conj54",
            "conjectures",
            "Conjecture 5.4 (5.3)-(5.5)",
            _scan_grid("conj54"),
            _scan_runner("conj54"),
            ("n", "p"),
            _pin_kind,
        ),
        _fam(
            "conj55",
            "conjectures",
            "Conjecture 5.5 (5.7)/(5.8)",
            _scan_grid("conj55"),
            _scan_runner("conj55"),
            ("n", "p"),
            _pin_kind,
        ),
        _fam(
            "conj56",
            "conjectures",
            "Conjecture 5.6 (5.9)",
            _scan_grid("conj56"),
            _scan_runner("conj56"),
            ("n",),
        ),
        _fam(
            "remark52",
            "conjectures",
            "Remark 5.2 (5.6)",
            _scan_grid("remark52"),
            _scan_runner("remark52"),
            ("n",),
        ),
        _fam(
            "remark53",
            "conjectures",
            "Remark 5.3",
            _scan_grid("remark53"),
            _scan_runner("remark53"),
            ("n",),
        ),
        _fam(
            "conj58i",
            "conjectures",
            "Conjecture 5.8(i) (5.11)/(5.12)",
            _scan_grid("conj58i"),
            _scan_runner("conj58i"),
            ("m", "n"),
        ),
    ]
)

GROUPS = ("sequences", "congruences", "framework", "q-analogues", "conjectures")

SCAN_SELECTORS = tuple(_SCAN_BOUND_KEYS)

Q_FAMILIES = ("qlucas", "lemma32", "thm31q", "thm32q", "conj57", "conj58q")


def family_names() -> list[str]:
    return list(FAMILIES)


def get_family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError("unknown family %r" % (name,)) from None


def instances_for(name: str, bounds: Optional[dict] = None) -> list[dict]:
    """Default (or bounded) parameter grid for one family."""
    return get_family(name).grid(dict(bounds or {}))


def run_instance(name: str, params: dict) -> CheckResult:
    """Execute a single instance; everything involved is picklable."""
    return get_family(name).run(params)


def run_pair(pair: tuple[str, dict]) -> CheckResult:
    return run_instance(pair[0], pair[1])


def all_jobs(
    names: Optional[list[str]] = None, bounds: Optional[dict] = None
) -> list[tuple[str, dict]]:
    """(family, params) pairs over the given families, in canonical order."""
    out: list[tuple[str, dict]] = []
    for name in names if names is not None else family_names():
        for params in instances_for(name, bounds):
            out.append((name, params))
    return out
