"""Batch sweeps over the sieving identities, with resumable checkpoints."""

import concurrent.futures
import itertools
import json
import os
from math import comb
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel
from rich.console import Console
from rich.progress import Progress
from sympy.utilities.iterables import multiset_permutations

from promotion_sieve.charge import (
    charge,
    charge_by_major_index,
    charge_rectangular,
    cocharge,
    cocharge_values,
    rotate_right,
)
from promotion_sieve.config import SieveConfig
from promotion_sieve.planepart import (
    pp_rowmotion,
    pp_to_shst,
    shst_charge_formula,
    shst_to_pp,
)
from promotion_sieve.promotion import promote, promote_inverse, successors
from promotion_sieve.qpoly import (
    QPoly,
    eval_at_root,
    kostka_foulkes,
    kostka_number,
    macmahon,
    modified_kf,
    principal_specialization,
)
from promotion_sieve.ribbon import (
    count_ribbon_tableaux,
    dlt_check,
    epsilon,
)
from promotion_sieve.shapes import (
    Composition,
    Partition,
    SkewShape,
    compositions,
    n_stat,
    partitions,
    rectangle,
    rotate,
    skew_shapes,
    sm_shape,
    stretch,
)
from promotion_sieve.sieve import (
    CONJUGATE_EXPONENT,
    CONJUGATE_EXPONENT_BINOMIAL,
    GF_SHIFT,
    GF_SHIFT_BINOMIAL,
    check_instance,
    find_shift,
    named_instance,
    orbit_census,
)
from promotion_sieve.skewrsk import (
    matrix_to_biword,
    rotate_columns,
    rsk,
    rsk_word,
    tableau_to_matrix,
)
from promotion_sieve.tableaux import (
    enumerate_ssyt,
    enumerate_syt_ribbon,
    reading_word,
    shst,
    shst_shape,
    sm_tableaux,
)

console = Console(stderr=True)

# Bumped whenever a sweep changes what it checks
CATALOGUE_VERSION = "3"

CHECKPOINT_FILENAME = ".promotion-sieve-checkpoint.json"

Outcome = Tuple[bool, str]
Task = Tuple[str, Callable[[], Outcome]]


class SweepResult(BaseModel):
    """Outcome of one check within a sweep."""

    key: str
    """Unique key, ``sweep:parameters``."""

    sweep: str
    verdict: str
    """``pass``, ``fail``, ``error`` or ``skipped``."""

    detail: str = ""


def _pass_fail(ok: bool) -> str:
    return "pass" if ok else "fail"


def _instance(name: str, cross_check: bool, **params) -> Outcome:
    report = check_instance(named_instance(name, params, cross_check=cross_check))
    failing = [row for row in report.rows if not row.ok]
    detail = f"{report.size} elements, orbits {report.orbit_sizes}"
    if failing:
        detail += f", first failing row {failing[0].model_dump(exclude_none=True)}"
    return report.passed, detail


def _shst_census(cross_check: bool) -> List[Task]:
    def check() -> Outcome:
        params = {"a": 1, "b": 2, "n": 2}
        tableaux = shst(1, 2, 2)
        cocharges = sorted(cocharge(reading_word(t)) for t in tableaux)
        census = orbit_census("shst", params, cross_check=cross_check)
        poly = modified_kf(shst_shape(1, 2, 2), Composition(parts=(2, 2, 2, 2)))
        report = check_instance(named_instance("stretched-hooks", params))
        ok = (
            len(tableaux) == 6
            and census.sizes == [3, 3]
            and cocharges == [6, 7, 8, 8, 9, 10]
            and poly == QPoly.parse("q^6+q^7+2q^8+q^9+q^10")
            and report.passed
        )
        return ok, f"{census.summary()}; cocharges {cocharges}; {poly}"

    return [("shst-census:1,2,2", check)]


def _charge_rectangular(cross_check: bool) -> List[Task]:
    def check(k: int, n: int) -> Outcome:
        letters = [x for x in range(1, k + 1) for _ in range(n)]
        bad = [
            w
            for w in map(tuple, multiset_permutations(letters))
            if charge_rectangular(w, k) != charge(w)
        ]
        return not bad, f"first mismatch {bad[0]}" if bad else ""

    return [
        (f"charge-rectangular:{k},{n}", lambda k=k, n=n: check(k, n))
        for k in range(1, 5)
        for n in range(1, 4)
    ]


def _kostka_foulkes(cross_check: bool) -> List[Task]:
    def modified_vs_classical(total: int) -> Outcome:
        checked = 0
        for shape in skew_shapes(total):
            if shape.outer.size != total:
                continue
            for nu in partitions(shape.size):
                classical = kostka_foulkes(shape, nu)
                expected = classical.reflect().shift(n_stat(nu))
                if modified_kf(shape, nu) != expected:
                    return False, f"relation fails on {shape} with content {nu}"
                checked += 1
        return True, f"{checked} pairs"

    def real_values(n: int, max_outer: int) -> Outcome:
        real = 0
        for shape in skew_shapes(max_outer):
            if shape.size % n:
                continue
            for nu in partitions(shape.size // n):
                content = stretch(nu, n)
                modified = modified_kf(shape, content)
                classical = kostka_foulkes(shape, content)
                for d in range(n):
                    value = eval_at_root(modified, n, d)
                    other = eval_at_root(classical, n, d)
                    if value != other.conjugate():
                        return False, f"{shape}, content {content}, d={d}"
                    real += value.is_real()
        return True, f"{real} real values agree"

    def knuth(size: int) -> Outcome:
        checked = 0
        for nu in partitions(size):
            letters = [i + 1 for i, p in enumerate(nu.parts) for _ in range(p)]
            for w in map(tuple, multiset_permutations(letters)):
                p, _ = rsk_word(w)
                if charge(reading_word(p)) != charge(w):
                    return False, f"insertion changes the charge of {w}"
                checked += 1
        return True, f"{checked} words"

    def permutation_lemmas(n: int) -> Outcome:
        for p in itertools.permutations(range(1, n + 1)):
            if sum(cocharge_values(p)) != comb(n, 2) - charge_by_major_index(p):
                return False, f"major index identity fails on {p}"
            difference = cocharge(rotate_right(p)) - cocharge(p)
            if difference != (-(n - 1) if p[-1] == 1 else 1):
                return False, f"rotation changes cocharge by {difference} on {p}"
        return True, ""

    tasks: List[Task] = [
        (
            f"kostka-foulkes:modified-vs-classical:{total}",
            lambda total=total: modified_vs_classical(total),
        )
        for total in range(1, 10)
    ]
    for n, max_outer in ((2, 8), (3, 9), (4, 8)):
        tasks.append(
            (
                f"kostka-foulkes:real-values:{n}",
                lambda n=n, m=max_outer: real_values(n, m),
            )
        )
    for size in range(1, 9):
        tasks.append((f"kostka-foulkes:knuth:{size}", lambda s=size: knuth(s)))
    for n in range(2, 8):
        tasks.append(
            (f"kostka-foulkes:rotation:{n}", lambda n=n: permutation_lemmas(n))
        )
    return tasks


def _stretched_hooks(cross_check: bool) -> List[Task]:
    def identities(a: int, b: int, n: int) -> Outcome:
        tableaux = shst(a, b, n)
        m = a + b + 1
        for t in tableaux:
            w = reading_word(t)
            size = shst_to_pp(t, a, b, n).size
            if charge(w) != shst_charge_formula(t, a, b, n):
                return False, f"charge formula fails on {t}"
            if 2 * (charge(w) + size) != n * a * (a + 2 * b + 1):
                return False, f"charge plus plane partition size fails on {t}"
            if 2 * (cocharge(w) - size) != n * b * (b + 1):
                return False, f"cocharge minus plane partition size fails on {t}"
            if n <= 2:
                if pp_to_shst(shst_to_pp(t, a, b, n)) != t:
                    return False, f"plane partition round trip fails on {t}"
                lhs = shst_to_pp(promote_inverse(t, m), a, b, n)
                if lhs != pp_rowmotion(shst_to_pp(t, a, b, n)):
                    return False, f"rowmotion equivariance fails on {t}"
        gf = modified_kf(shst_shape(a, b, n), Composition(parts=(n,) * m))
        box = macmahon(a, b, n)
        if gf != box.shift(n * b * (b + 1) // 2):
            return False, f"cocharge generating function {gf}"
        swapped = modified_kf(shst_shape(b, a, n), Composition(parts=(n,) * m))
        if gf != swapped.shift(n * (b * (b + 1) - a * (a + 1)) // 2):
            return False, "conjugation symmetry fails"
        binomial_shift = gf == box.shift(n * b * (b - 1) // 2)
        binomial_conjugate = gf == swapped.shift(n * (a * a - a - b * b + b) // 2)
        return True, (
            f"{len(tableaux)} tableaux; shift n*C(b,2) "
            f"{_pass_fail(binomial_shift)}; conjugate exponent n*(C(a,2)-C(b,2)) "
            f"{_pass_fail(binomial_conjugate)}"
        )

    def binomial_exponents(a: int, b: int, n: int) -> Outcome:
        params = {"a": a, "b": b, "n": n}
        report = check_instance(
            named_instance("stretched-hooks", params, cross_check=cross_check)
        )
        expected = {
            GF_SHIFT: "pass",
            GF_SHIFT_BINOMIAL: "fail",
            CONJUGATE_EXPONENT: "pass",
            CONJUGATE_EXPONENT_BINOMIAL: "fail",
        }
        found = {label: report.alternatives.get(label) for label in expected}
        ok = report.passed and found == expected
        return ok, "; ".join(f"{k}: {v}" for k, v in found.items())

    def stanley() -> Outcome:
        a, b, n = 2, 2, 2
        lam = Partition(parts=(b,) * a)
        ps = principal_specialization(lam, a + n).shift(-n_stat(lam))
        return ps == macmahon(a, b, n), str(ps)

    tasks: List[Task] = []
    for a in range(1, 4):
        for b in range(1, 4):
            for n in range(1, 4):
                tasks.append(
                    (
                        f"stretched-hooks:identities:{a},{b},{n}",
                        lambda a=a, b=b, n=n: identities(a, b, n),
                    )
                )
                if a + b <= 5:
                    tasks.append(
                        (
                            f"stretched-hooks:csp:{a},{b},{n}",
                            lambda a=a, b=b, n=n: _instance(
                                "stretched-hooks", cross_check, a=a, b=b, n=n
                            ),
                        )
                    )
    for a, b, n in ((1, 2, 2), (2, 3, 1), (2, 1, 1)):
        tasks.append(
            (
                f"stretched-hooks:binomial-exponents:{a},{b},{n}",
                lambda a=a, b=b, n=n: binomial_exponents(a, b, n),
            )
        )
    for a, b, n in ((1, 1, 1), (1, 2, 2), (2, 2, 2), (2, 3, 1)):
        tasks.append(
            (
                f"stretched-hooks:plane-partitions:{a},{b},{n}",
                lambda a=a, b=b, n=n: _instance(
                    "plane-partitions", cross_check, a=a, b=b, n=n
                ),
            )
        )
    tasks.append(("stretched-hooks:stanley:2,2,2", stanley))
    return tasks


_DISPLAY_4422 = (
    "q^25+q^24+4q^23+5q^22+10q^21+13q^20+21q^19+24q^18+33q^17+34q^16+39q^15"
    "+36q^14+36q^13+27q^12+23q^11+14q^10+9q^9+4q^8+2q^7"
)


def _ribbon_counts(cross_check: bool) -> List[Task]:
    def example() -> Outcome:
        shape = SkewShape.straight((4, 4, 2, 2))
        counts = (
            count_ribbon_tableaux(shape, Composition(parts=(1, 1, 1, 1)), 3),
            count_ribbon_tableaux(shape, Composition(parts=(2, 1, 1)), 3),
        )
        sign = epsilon(shape, 3)
        kf = kostka_foulkes(shape, Partition(parts=(2, 2, 2, 1, 1, 1, 1, 1, 1)))
        value = eval_at_root(kf, 3, 1)
        ok = (
            counts == (6, 3)
            and sign == -1
            and kf == QPoly.parse(_DISPLAY_4422)
            and value.is_integer()
            and value.as_integer() == -3
        )
        return ok, f"counts {counts}, sign {sign}, value {value}"

    def dlt(size: int, j: int) -> Outcome:
        checked = 0
        for lam in partitions(size):
            for nu in partitions(size // j):
                record = dlt_check(
                    SkewShape(outer=lam), Composition(parts=nu.parts), j
                )
                if not record.ok:
                    return False, record.model_dump_json()
                checked += 1
        return True, f"{checked} pairs"

    tasks: List[Task] = [("ribbon-counts:4422", example)]
    for j in (2, 3):
        for size in range(j, 9, j):
            tasks.append(
                (f"ribbon-counts:dlt:{size},{j}", lambda s=size, j=j: dlt(s, j))
            )
    return tasks


def _disjoint_rows(cross_check: bool) -> List[Task]:
    def rsk_identities(nu: Partition, n: int) -> Outcome:
        m = nu.size
        for t in sm_tableaux(nu, n):
            matrix = tableau_to_matrix(t, m)
            biword = matrix_to_biword(matrix)
            if biword.bottom != reading_word(t):
                return False, f"biword bottom row differs from the reading word of {t}"
            p, _ = rsk(biword)
            if charge(reading_word(p)) != charge(reading_word(t)):
                return False, f"insertion changes the charge of {t}"
            if rotate_columns(matrix, 1) != tableau_to_matrix(promote(t, m), m):
                return False, f"column rotation differs from promotion on {t}"
        reversed_content = Composition(parts=tuple(n * p for p in reversed(nu.parts)))
        total = QPoly()
        for lam in partitions(m * n):
            shape = SkewShape(outer=lam)
            count = kostka_number(shape, reversed_content)
            if count:
                total = total + kostka_foulkes(shape, Partition(parts=(n,) * m)) * count
        gf = kostka_foulkes(sm_shape(nu, n), Partition(parts=(n,) * m))
        return gf == total, str(gf)

    tasks: List[Task] = []
    for m in range(1, 5):
        for nu in partitions(m):
            for n in (1, 2):
                label = f"{nu}|{n}"
                tasks.append(
                    (
                        f"disjoint-rows:csp:{label}",
                        lambda nu=nu, n=n: _instance(
                            "disjoint-rows", cross_check, nu=nu, n=n
                        ),
                    )
                )
                tasks.append(
                    (
                        f"disjoint-rows:rsk:{label}",
                        lambda nu=nu, n=n: rsk_identities(nu, n),
                    )
                )
    return tasks


def _period(gamma: Composition) -> int:
    m = gamma.length
    return next(d for d in range(1, m + 1) if m % d == 0 and rotate(gamma, d) == gamma)


def _fontaine_kamnitzer(cross_check: bool) -> List[Task]:
    def fixed_points(a: int, b: int, gamma: Composition) -> Outcome:
        shape = SkewShape(outer=rectangle(a, b))
        m = gamma.length
        elements = enumerate_ssyt(shape, gamma)
        successor = successors(elements, lambda t: promote(t, m, cross_check))
        for e in range(1, m + 1):
            if m % e or rotate(gamma, e) != gamma:
                continue
            power = list(range(len(elements)))
            for _ in range(e):
                power = [successor[i] for i in power]
            fixed = sum(1 for x, y in enumerate(power) if x == y)
            ribbons = count_ribbon_tableaux(
                shape, Composition(parts=gamma.parts[:e]), m // e
            )
            if fixed != ribbons:
                return False, f"promotion^{e}: {fixed} fixed, {ribbons} ribbon tableaux"
        return True, f"{len(elements)} tableaux"

    tasks: List[Task] = []
    for a in range(1, 9):
        for b in range(1, 9 // a + 1):
            if a * b > 8:
                continue
            for m in range(2, 5):
                for gamma in compositions(a * b, m):
                    if 0 in gamma.parts:
                        continue
                    d = _period(gamma)
                    if d == m:
                        continue
                    label = f"{a}^{b}|{gamma}|{d}"
                    tasks.append(
                        (
                            f"fontaine-kamnitzer:csp:{label}",
                            lambda a=a, b=b, g=gamma, d=d: _instance(
                                "rectangle-fixed-content",
                                cross_check,
                                a=a,
                                b=b,
                                gamma=g,
                                d=d,
                            ),
                        )
                    )
                    tasks.append(
                        (
                            f"fontaine-kamnitzer:fixed-points:{label}",
                            lambda a=a, b=b, g=gamma: fixed_points(a, b, g),
                        )
                    )
    return tasks


def _disjoint_rectangles(cross_check: bool) -> List[Task]:
    def counterexample() -> Outcome:
        g = QPoly.parse("4+3q+4q^2+4q^4+3q^5")
        shift = find_shift(g, 6)
        return shift is None, f"shift {shift}"

    rects = [(a, b) for a in range(1, 8) for b in range(1, 8) if a * b <= 7]
    tasks: List[Task] = [("disjoint-rectangles:counterexample", counterexample)]
    for i, first in enumerate(rects):
        for second in rects[i:]:
            size = first[0] * first[1] + second[0] * second[1]
            if size > 8:
                continue
            for m in range(2, 5):
                for gamma in compositions(size, m):
                    if 0 in gamma.parts:
                        continue
                    d = _period(gamma)
                    if d == m:
                        continue
                    pair = [first, second]
                    tasks.append(
                        (
                            f"disjoint-rectangles:{first[0]}x{first[1]},"
                            f"{second[0]}x{second[1]}|{gamma}|{d}",
                            lambda r=pair, g=gamma, d=d: _instance(
                                "disjoint-rectangles",
                                cross_check,
                                rects=r,
                                gamma=g,
                                d=d,
                            ),
                        )
                    )
    return tasks


def _two_row(cross_check: bool) -> List[Task]:
    def census(m: int) -> Outcome:
        for b in range(1, m):
            size = len(enumerate_syt_ribbon(Composition(parts=(m - b, b))))
            if size != comb(m, b) - 1:
                return False, f"b={b}: {size} tableaux"
        return True, ""

    def orbits(m: int, b: int) -> Outcome:
        result = orbit_census("ribbon", {"alpha": (m - b, b)}, cross_check=cross_check)
        long = [s for s in result.sizes if s == m - 1]
        rest = [s for s in result.sizes if s != m - 1]
        expected = 6 if (m, b) == (4, 2) else m * (m - 1)
        ok = len(long) == 1 and all(m % s == 0 for s in rest)
        ok = ok and result.order == expected
        return ok, result.summary()

    tasks: List[Task] = [
        (f"two-row:count:{m}", lambda m=m: census(m)) for m in range(2, 11)
    ]
    for m in range(4, 9):
        for b in range(2, m - 1):
            tasks.append((f"two-row:orbits:{m},{b}", lambda m=m, b=b: orbits(m, b)))
            for name in ("two-row-m", "two-row-m-minus-1", "two-row"):
                tasks.append(
                    (
                        f"two-row:{name}:{m},{b}",
                        lambda name=name, m=m, b=b: _instance(
                            name, cross_check, m=m, b=b
                        ),
                    )
                )
    return tasks


def _three_row(cross_check: bool) -> List[Task]:
    def orbits(m: int) -> Outcome:
        alpha = (1, m - 2, 1)
        result = orbit_census("ribbon", {"alpha": alpha}, cross_check=cross_check)
        expected = sorted([m - 2] + [m - 1] * (m - 3))
        ok = result.size == (m - 1) * (m - 2) - 1 and result.sizes == expected
        return ok, result.summary()

    tasks: List[Task] = []
    for m in range(4, 10):
        tasks.append((f"three-row:orbits:{m}", lambda m=m: orbits(m)))
        tasks.append(
            (
                f"three-row:bicsp:{m}",
                lambda m=m: _instance("three-row", cross_check, m=m),
            )
        )
    return tasks


def _ribbon_orders(cross_check: bool) -> List[Task]:
    def order(alpha: Tuple[int, ...], expected: int) -> Outcome:
        result = orbit_census("ribbon", {"alpha": alpha}, cross_check=cross_check)
        return result.order == expected, f"order {result.order}"

    cases = [((k, k, k), o) for k, o in zip((1, 2, 3), (1, 60, 814773960))]
    cases += [((1, 1, k, 1), o) for k, o in zip(range(1, 6), (1, 20, 55, 114, 203))]
    return [
        (
            f"ribbon-orders:{','.join(map(str, alpha))}",
            lambda alpha=alpha, o=o: order(alpha, o),
        )
        for alpha, o in cases
    ]


def _matrices(cross_check: bool) -> List[Task]:
    tasks: List[Task] = []
    for m in range(1, 4):
        for nu in partitions(m):
            for n in (1, 2):
                tasks.append(
                    (
                        f"matrices:{nu}|{n}",
                        lambda nu=nu, n=n: _instance(
                            "matrices", cross_check, nu=nu, n=n
                        ),
                    )
                )
    return tasks


def _classic_instances(cross_check: bool) -> List[Task]:
    tasks: List[Task] = []
    for n in range(1, 5):
        tasks.append(
            (
                f"classic-instances:binary-words:{2 * n},{n}",
                lambda n=n: _instance("binary-words", cross_check, n=2 * n, k=n),
            )
        )
    for n, k in ((1, 3), (2, 2), (2, 3), (3, 2)):
        tasks.append(
            (
                f"classic-instances:words:{n},{k}",
                lambda n=n, k=k: _instance("words", cross_check, n=n, k=k),
            )
        )
    for a, b, m in ((1, 1, 3), (2, 2, 3), (2, 2, 4), (3, 2, 4), (2, 3, 4)):
        tasks.append(
            (
                f"classic-instances:rectangle:{a},{b},{m}",
                lambda a=a, b=b, m=m: _instance(
                    "rectangle", cross_check, a=a, b=b, m=m
                ),
            )
        )
    return tasks


SWEEPS: Dict[str, Callable[[bool], List[Task]]] = {
    "shst-census": _shst_census,
    "charge-rectangular": _charge_rectangular,
    "kostka-foulkes": _kostka_foulkes,
    "stretched-hooks": _stretched_hooks,
    "ribbon-counts": _ribbon_counts,
    "disjoint-rows": _disjoint_rows,
    "fontaine-kamnitzer": _fontaine_kamnitzer,
    "disjoint-rectangles": _disjoint_rectangles,
    "two-row": _two_row,
    "three-row": _three_row,
    "ribbon-orders": _ribbon_orders,
    "matrices": _matrices,
    "classic-instances": _classic_instances,
}


class SievingCensus:
    """Runner for the sweep catalogue."""

    def __init__(self, config: SieveConfig):
        """Initialize the runner.

        Args:
            config: The configuration to use.
        """
        self.config = config
        self.checkpoint_path: Optional[Path] = config.checkpoint
        self.checkpoint: Dict = self._fresh_checkpoint()

    @staticmethod
    def _fresh_checkpoint() -> Dict:
        return {"catalogue": CATALOGUE_VERSION, "results": {}}

    def _load_checkpoint(self) -> None:
        """Load recorded verdicts, ignoring files from another catalogue."""
        if self.checkpoint_path is None or not self.checkpoint_path.exists():
            self.checkpoint = self._fresh_checkpoint()
            return
        try:
            with open(self.checkpoint_path, "r") as f:
                data = json.load(f)
            if data.get("catalogue") == CATALOGUE_VERSION and isinstance(
                data.get("results"), dict
            ):
                self.checkpoint = data
            else:
                console.print(
                    "[yellow]Checkpoint is from another sweep catalogue or "
                    "corrupted; starting fresh[/yellow]"
                )
                self.checkpoint = self._fresh_checkpoint()
        except Exception as e:
            console.print(f"[bold red]Error loading checkpoint file:[/] {e}")
            self.checkpoint = self._fresh_checkpoint()

    def _save_checkpoint(self) -> None:
        """Persist verdicts to disk atomically."""
        if self.checkpoint_path is None:
            return
        try:
            path = self.checkpoint_path
            tmp_path = path.parent / (path.name + ".tmp")
            with open(tmp_path, "w") as f:
                json.dump(self.checkpoint, f, indent=2, sort_keys=True)
            os.replace(tmp_path, path)
        except Exception as e:
            console.print(f"[bold red]Error saving checkpoint file:[/] {e}")

    def run(self, selection: Optional[Sequence[str]] = None) -> List[SweepResult]:
        """Run the selected sweeps, all of them by default.

        Args:
            selection: Sweep names from ``SWEEPS``.

        Returns:
            One result per check, in catalogue order.

        Raises:
            ValueError: If a selected sweep does not exist.
        """
        names = list(selection) if selection else list(SWEEPS)
        unknown = [name for name in names if name not in SWEEPS]
        if unknown:
            raise ValueError(
                f"unknown sweep {unknown[0]!r}; known: {', '.join(SWEEPS)}"
            )
        self._load_checkpoint()
        results: List[SweepResult] = []
        try:
            for name in names:
                results.extend(self._run_sweep(name))
        finally:
            self._save_checkpoint()
        return results

    def _run_sweep(self, name: str) -> List[SweepResult]:
        """Run one sweep's checks on the thread pool, skipping recorded passes."""
        tasks = SWEEPS[name](self.config.cross_check)
        recorded = self.checkpoint.setdefault("results", {})
        done: Dict[str, SweepResult] = {}
        pending: List[Task] = []
        for key, task in tasks:
            if recorded.get(key) == "pass":
                done[key] = SweepResult(key=key, sweep=name, verdict="skipped")
            else:
                pending.append((key, task))

        console.print(
            f"[bold]Sweep:[/] {name} ({len(pending)} to run, {len(done)} recorded)"
        )
        with Progress(console=console, disable=not self.config.progress) as progress:
            bar = progress.add_task(f"Checking '{name}'", total=len(pending))
            with concurrent.futures.ThreadPoolExecutor(
                max_workers=self.config.threads
            ) as executor:
                futures = {executor.submit(task): key for key, task in pending}
                for future in concurrent.futures.as_completed(futures):
                    key = futures[future]
                    try:
                        ok, detail = future.result()
                        verdict = "pass" if ok else "fail"
                    except Exception as e:
                        verdict, detail = "error", f"{type(e).__name__}: {e}"
                        console.print(f"[bold red]Error in {key}:[/] {e}")
                    finally:
                        progress.update(bar, advance=1)
                    recorded[key] = verdict
                    done[key] = SweepResult(
                        key=key, sweep=name, verdict=verdict, detail=detail
                    )
            progress.stop()

        failed = sum(1 for r in done.values() if r.verdict in ("fail", "error"))
        colour = "green" if not failed else "bold red"
        console.print(f"[{colour}]{name}: {failed} failing of {len(done)}[/]")
        return [done[key] for key, _ in tasks]
