"""Cyclic and bicyclic sieving checks and the named sieving instances."""

import inspect
from itertools import combinations
from math import comb
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field
from sympy.utilities.iterables import multiset_permutations

from promotion_sieve.planepart import enumerate_pp, pp_rowmotion
from promotion_sieve.promotion import (
    Orbit,
    cycles,
    order_of,
    promote,
    promote_power,
    successors,
)
from promotion_sieve.qpoly import (
    CycloValue,
    QPoly,
    QTPoly,
    eval_at_root,
    eval_bivariate_at_roots,
    kostka_foulkes,
    kostka_number,
    macmahon,
    modified_kf,
    q_binomial,
    q_int,
    q_multinomial,
    rectangle_sieving_polynomial,
)
from promotion_sieve.shapes import (
    Composition,
    Partition,
    SkewShape,
    parse_composition,
    parse_partition,
    parse_skew_shape,
    partitions,
    rectangle,
    rectangles_shape,
    rotate,
    sm_shape,
    sorted_partition,
)
from promotion_sieve.skewrsk import enumerate_matrices, rotate_columns
from promotion_sieve.tableaux import (
    enumerate_bounded_ssyt,
    enumerate_ssyt,
    enumerate_syt_ribbon,
    shst,
    shst_shape,
    sm_tableaux,
)

SCHEMA_VERSION = "1"

# Labels of the identities reported beside the stretched hook check
GF_SHIFT = "cocharge gf = q^(n*C(b+1,2)) M"
GF_SHIFT_BINOMIAL = "cocharge gf = q^(n*C(b,2)) M"
CONJUGATE_EXPONENT = "conjugate exponent n*(C(b+1,2)-C(a+1,2))"
CONJUGATE_EXPONENT_BINOMIAL = "conjugate exponent n*(C(a,2)-C(b,2))"
CSP_SHIFT_BINOMIAL = "csp shift -n*C(b,2)"


class UnknownInstanceError(ValueError):
    """No such named instance, or its parameters are unusable."""


class ActionOrderError(ValueError):
    """Applying an action its declared number of times is not the identity."""


class CyclicAction(BaseModel):
    """A bijection on a finite set together with its declared order."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    """Short description, e.g. ``promotion^4``."""

    order: int = Field(ge=1)
    """Declared order n: applying ``step`` n times is the identity."""

    step: Callable[[Any], Any]
    """The bijection."""

    key: Optional[Callable[[Any], Any]] = None
    """Sort key for canonical orbit representatives."""


class CheckRow(BaseModel):
    """Fixed points against the polynomial value for one group element."""

    d: Optional[int] = None
    """Exponent of the generator (cyclic checks)."""

    i: Optional[int] = None
    """Exponent of the first generator (bicyclic checks)."""

    j: Optional[int] = None
    """Exponent of the second generator (bicyclic checks)."""

    fixed: int
    eval: Optional[int] = None
    """The polynomial value, None when it is not a rational integer."""

    residue: Optional[str] = None
    """Non-integer values as a polynomial in the root z."""

    ok: bool
    failure: Optional[str] = None
    """``non-integer``, ``negative`` or ``mismatch`` when the row fails."""


class CheckReport(BaseModel):
    """Outcome of one sieving verification."""

    schema_: str = Field(default=SCHEMA_VERSION, alias="schema")
    instance: str
    size: int
    order: Optional[int] = None
    orders: Optional[Tuple[int, int]] = None
    polynomial: str
    shift: Optional[int] = None
    """Power of q applied to the base polynomial, when one was applied."""

    orbit_sizes: List[int] = Field(default_factory=list)
    rows: List[CheckRow]
    alternatives: Dict[str, str] = Field(default_factory=dict)
    """Verdicts for candidate polynomials that are reported but not binding."""

    verdict: str

    model_config = ConfigDict(populate_by_name=True)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_payload(self) -> dict:
        return self.model_dump(by_alias=True, exclude_none=True)


class OrbitCensus(BaseModel):
    """Orbit sizes and order of promotion on one family."""

    family: str
    alphabet: int
    size: int
    sizes: List[int]
    order: int

    def summary(self) -> str:
        return f"sizes: {','.join(str(s) for s in self.sizes)}; order: {self.order}"


class Instance(BaseModel):
    """A set, one or two commuting actions and a sieving polynomial."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str
    elements: List[Any]
    actions: List[CyclicAction]
    polynomial: Union[QPoly, QTPoly]
    shift: Optional[int] = None
    alternatives: Dict[str, QPoly] = Field(default_factory=dict)
    identities: Dict[str, bool] = Field(default_factory=dict)
    """Exact polynomial identities reported beside the sieving verdict."""


def _power_map(successor: Sequence[int], d: int) -> List[int]:
    result = list(range(len(successor)))
    for _ in range(d):
        result = [successor[i] for i in result]
    return result


def _fixed_counts(successor: Sequence[int], order: int) -> List[int]:
    """Fixed points of every power 0..order-1, by applying the map."""
    counts = []
    current = list(range(len(successor)))
    for _ in range(order):
        counts.append(sum(1 for x, y in enumerate(current) if x == y))
        current = [successor[i] for i in current]
    if any(x != y for x, y in enumerate(current)):
        raise ActionOrderError(f"the action does not have order dividing {order}")
    return counts


def _row(fixed: int, value: CycloValue, **where: int) -> CheckRow:
    if not value.is_integer():
        return CheckRow(
            fixed=fixed, residue=str(value), ok=False, failure="non-integer", **where
        )
    number = value.as_integer()
    if number < 0:
        return CheckRow(fixed=fixed, eval=number, ok=False, failure="negative", **where)
    if number != fixed:
        return CheckRow(fixed=fixed, eval=number, ok=False, failure="mismatch", **where)
    return CheckRow(fixed=fixed, eval=number, ok=True, **where)


def _verdict(rows: Sequence[CheckRow]) -> str:
    return "pass" if all(row.ok for row in rows) else "fail"


def _csp_rows(fixed: Sequence[int], f: QPoly, order: int) -> List[CheckRow]:
    return [_row(fixed[d], eval_at_root(f, order, d), d=d) for d in range(order)]


def csp_check(
    elements: Sequence[Any],
    action: CyclicAction,
    f: QPoly,
    threads: int = 1,
    instance: str = "custom",
    shift: Optional[int] = None,
    alternatives: Optional[Dict[str, QPoly]] = None,
    advance: Optional[Callable[[], None]] = None,
) -> CheckReport:
    """Compare fixed points of every power of ``action`` with ``f(xi^d)``.

    Fixed points are counted by applying the map; orbit sizes are recorded
    alongside and must satisfy Burnside's count.

    Args:
        elements: The finite set.
        action: The cyclic action and its declared order n.
        f: The candidate sieving polynomial.
        threads: Worker threads for computing images.
        instance: Name recorded in the report.
        shift: Power of q already applied to ``f``, for the report only.
        alternatives: Other candidate polynomials to evaluate and report.
        advance: Progress callback, once per computed image.

    Returns:
        The report; its verdict is ``pass`` only when every row matches.

    Raises:
        ActionOrderError: If ``action`` raised to its order is not the identity.
        NotClosedError: If the action leaves the set.
    """
    n = action.order
    successor = successors(elements, action.step, threads, advance)
    fixed = _fixed_counts(successor, n)
    orbits = cycles(elements, successor, action.key)
    if sum(fixed) != n * len(orbits):
        raise AssertionError(
            f"fixed points {fixed} do not average to {len(orbits)} orbits"
        )
    rows = _csp_rows(fixed, f, n)
    report_alternatives = {
        label: _verdict(_csp_rows(fixed, g, n))
        for label, g in (alternatives or {}).items()
    }
    return CheckReport(
        instance=instance,
        size=len(elements),
        order=n,
        polynomial=f.to_text(),
        shift=shift,
        orbit_sizes=sorted(o.length for o in orbits),
        rows=rows,
        alternatives=report_alternatives,
        verdict=_verdict(rows),
    )


def bicsp_check(
    elements: Sequence[Any],
    first: CyclicAction,
    second: CyclicAction,
    f: QTPoly,
    threads: int = 1,
    instance: str = "custom",
    advance: Optional[Callable[[], None]] = None,
) -> CheckReport:
    """Compare fixed points of ``first^i second^j`` with ``f(z1^i, z2^j)``.

    Raises:
        ValueError: If the two actions do not commute.
        ActionOrderError: If either action has the wrong order.
    """
    k1, k2 = first.order, second.order
    s1 = successors(elements, first.step, threads, advance)
    s2 = successors(elements, second.step, threads, advance)
    if any(s1[s2[x]] != s2[s1[x]] for x in range(len(elements))):
        raise ValueError(f"{first.name} and {second.name} do not commute")
    _fixed_counts(s1, k1)
    _fixed_counts(s2, k2)
    rows = []
    for i in range(k1):
        p1 = _power_map(s1, i)
        for j in range(k2):
            p2 = _power_map(s2, j)
            fixed = sum(1 for x in range(len(elements)) if p1[p2[x]] == x)
            value = eval_bivariate_at_roots(f, k1, i, k2, j)
            rows.append(_row(fixed, value, i=i, j=j))
    return CheckReport(
        instance=instance,
        size=len(elements),
        orders=(k1, k2),
        polynomial=f.to_text(),
        rows=rows,
        verdict=_verdict(rows),
    )


def root_values(f: QPoly, n: int) -> List[Optional[int]]:
    """``f(xi^d)`` for d = 0..n-1, None where the value is not an integer."""
    values = []
    for d in range(n):
        value = eval_at_root(f, n, d)
        values.append(value.as_integer() if value.is_integer() else None)
    return values


def find_shift(f: QPoly, n: int) -> Optional[int]:
    """Least E in 0..n-1 making ``q^E f`` non-negative integral at all n-th roots."""
    for e in range(n):
        values = root_values(f.shift(e), n)
        if all(v is not None and v >= 0 for v in values):
            return e
    return None


def orbit_polynomial(orbits: Sequence[Orbit], n: int) -> QPoly:
    """Sum over orbits of size s of ``[s]`` evaluated at ``q^(n/s)``.

    It satisfies the sieving identity for any action whose orbits these are.
    """
    exponents = []
    for orbit in orbits:
        s = orbit.length
        if n % s:
            raise ActionOrderError(f"orbit size {s} does not divide {n}")
        exponents.extend(k * (n // s) for k in range(s))
    return QPoly.from_exponents(exponents)


def _rows_key(x: Any) -> Any:
    return x.rows


def _promotion(m: int, power: int, order: int, cross_check: bool) -> CyclicAction:
    name = "promotion" if power == 1 else f"promotion^{power}"
    if power == 1:
        step = lambda t: promote(t, m, cross_check)  # noqa: E731
    else:
        step = lambda t: promote_power(t, m, power, cross_check)  # noqa: E731
    return CyclicAction(name=name, order=order, step=step, key=_rows_key)


def _rotation(order: int) -> CyclicAction:
    return CyclicAction(
        name="rotation", order=order, step=lambda w: w[1:] + w[:1], key=lambda w: w
    )


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise UnknownInstanceError(message)


def _as_partition(value: Any) -> Partition:
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return parse_partition(value)
    return Partition(parts=tuple(value))


def _as_composition(value: Any) -> Composition:
    if isinstance(value, Composition):
        return value
    if isinstance(value, str):
        return parse_composition(value)
    return Composition(parts=tuple(value))


def _stretched_hooks(a: int, b: int, n: int, cross_check: bool = False) -> Instance:
    _require(a >= 0 and b >= 0 and n >= 1 and a + b >= 1, "need a, b >= 0, n >= 1")
    m = a + b + 1
    content = Composition(parts=(n,) * m)
    cocharge_gf = modified_kf(shst_shape(a, b, n), content)
    swapped = modified_kf(shst_shape(b, a, n), content)
    box = macmahon(a, b, n)
    shift = n * b * (b + 1) // 2
    binomial = n * b * (b - 1) // 2
    return Instance(
        name="stretched-hooks",
        elements=shst(a, b, n),
        actions=[_promotion(m, 1, a + b, cross_check)],
        polynomial=cocharge_gf.shift(-shift),
        shift=-shift,
        alternatives={CSP_SHIFT_BINOMIAL: cocharge_gf.shift(-binomial)},
        identities={
            GF_SHIFT: cocharge_gf == box.shift(shift),
            GF_SHIFT_BINOMIAL: cocharge_gf == box.shift(binomial),
            CONJUGATE_EXPONENT: (
                cocharge_gf == swapped.shift(n * (b * (b + 1) - a * (a + 1)) // 2)
            ),
            CONJUGATE_EXPONENT_BINOMIAL: (
                cocharge_gf == swapped.shift(n * (a * a - a - b * b + b) // 2)
            ),
        },
    )


def _disjoint_rows(nu: Any, n: int, cross_check: bool = False) -> Instance:
    nu = _as_partition(nu)
    _require(nu.length > 0 and n >= 1, "need a non-empty nu and n >= 1")
    m = nu.size
    return Instance(
        name="disjoint-rows",
        elements=sm_tableaux(nu, n),
        actions=[_promotion(m, 1, m, cross_check)],
        polynomial=kostka_foulkes(sm_shape(nu, n), Partition(parts=(n,) * m)),
    )


def _fixed_content(
    shape: SkewShape, gamma: Composition, d: int, cross_check: bool
) -> Tuple[List[Any], CyclicAction, QPoly]:
    m = gamma.length
    _require(m > 0 and d >= 1 and m % d == 0, f"d={d} must divide m={m}")
    _require(rotate(gamma, d) == gamma, f"content {gamma} is not fixed by rot^{d}")
    elements = enumerate_ssyt(shape, gamma)
    action = _promotion(m, d, m // d, cross_check)
    return elements, action, kostka_foulkes(shape, sorted_partition(gamma.parts))


def _rectangle_fixed_content(
    a: int, b: int, gamma: Any, d: int = 1, cross_check: bool = False
) -> Instance:
    gamma = _as_composition(gamma)
    _require(a >= 1 and b >= 1, "need a, b >= 1")
    _require(gamma.size == a * b, f"content {gamma} does not fill {a}^{b}")
    shape = SkewShape(outer=rectangle(a, b))
    elements, action, kf = _fixed_content(shape, gamma, d, cross_check)
    shift = (a * a * b - sum(g * g for g in gamma.parts)) // 2
    return Instance(
        name="rectangle-fixed-content",
        elements=elements,
        actions=[action],
        polynomial=kf.shift(shift),
        shift=shift,
    )


def _disjoint_rectangles(
    rects: Any, gamma: Any, d: int = 1, cross_check: bool = False
) -> Instance:
    if isinstance(rects, str):
        rects = [tuple(int(x) for x in r.split("x")) for r in rects.split(",")]
    rects = [tuple(r) for r in rects]
    _require(
        bool(rects) and all(len(r) == 2 and min(r) >= 1 for r in rects),
        "rectangles are written AxB with positive sides",
    )
    gamma = _as_composition(gamma)
    shape = rectangles_shape(rects)
    _require(gamma.size == shape.size, f"content {gamma} does not fill {shape}")
    elements, action, kf = _fixed_content(shape, gamma, d, cross_check)
    shift = find_shift(kf, action.order)
    return Instance(
        name="disjoint-rectangles",
        elements=elements,
        actions=[action],
        polynomial=kf if shift is None else kf.shift(shift),
        shift=shift,
    )


def _rectangle(a: int, b: int, m: int, cross_check: bool = False) -> Instance:
    _require(a >= 1 and b >= 1 and m >= b, "need a, b >= 1 and m >= b")
    lam = rectangle(a, b)
    return Instance(
        name="rectangle",
        elements=enumerate_bounded_ssyt(SkewShape(outer=lam), m),
        actions=[_promotion(m, 1, m, cross_check)],
        polynomial=rectangle_sieving_polynomial(lam, m),
    )


def _matrices(nu: Any, n: int, cross_check: bool = False) -> Instance:
    nu = _as_partition(nu)
    _require(nu.length > 0 and n >= 1, "need a non-empty nu and n >= 1")
    m = nu.size
    stretched = Composition(parts=tuple(n * p for p in nu.parts))
    f = QPoly()
    for lam in partitions(m * n):
        shape = SkewShape(outer=lam)
        count = kostka_number(shape, stretched)
        if count:
            f = f + kostka_foulkes(shape, Partition(parts=(n,) * m)) * count
    action = CyclicAction(
        name="column rotation",
        order=m,
        step=lambda matrix: rotate_columns(matrix, 1),
        key=_rows_key,
    )
    return Instance(
        name="matrices",
        elements=enumerate_matrices(stretched.parts, (n,) * m),
        actions=[action],
        polynomial=f,
    )


def _binary_words(n: int, k: int, cross_check: bool = False) -> Instance:
    _require(n >= 1 and 0 <= k <= n, "need n >= 1 and 0 <= k <= n")
    words = []
    for ones in combinations(range(n), k):
        words.append(tuple(1 if i in ones else 0 for i in range(n)))
    return Instance(
        name="binary-words",
        elements=words,
        actions=[_rotation(n)],
        polynomial=q_binomial(n, k),
    )


def _words(n: int, k: int, cross_check: bool = False) -> Instance:
    _require(n >= 1 and k >= 1, "need n, k >= 1")
    letters = [x for x in range(1, k + 1) for _ in range(n)]
    return Instance(
        name="words",
        elements=[tuple(w) for w in multiset_permutations(letters)],
        actions=[_rotation(k * n)],
        polynomial=q_multinomial((n,) * k),
    )


def _plane_partitions(a: int, b: int, n: int, cross_check: bool = False) -> Instance:
    _require(a >= 1 and b >= 1 and n >= 0, "need a, b >= 1 and n >= 0")
    action = CyclicAction(
        name="rowmotion", order=a + b, step=pp_rowmotion, key=_rows_key
    )
    return Instance(
        name="plane-partitions",
        elements=enumerate_pp(a, b, n),
        actions=[action],
        polynomial=macmahon(a, b, n),
    )


def _two_row_elements(m: int, b: int) -> List[Any]:
    _require(2 <= b <= m - 2, "need 2 <= b <= m - 2")
    return enumerate_syt_ribbon(Composition(parts=(m - b, b)))


def _two_row_m(m: int, b: int, cross_check: bool = False) -> Instance:
    return Instance(
        name="two-row-m",
        elements=_two_row_elements(m, b),
        actions=[_promotion(m, m, m - 1, cross_check)],
        polynomial=q_int(m - 1) + (comb(m, b) - m),
    )


def _two_row_m_minus_1(m: int, b: int, cross_check: bool = False) -> Instance:
    return Instance(
        name="two-row-m-minus-1",
        elements=_two_row_elements(m, b),
        actions=[_promotion(m, m - 1, m, cross_check)],
        polynomial=q_binomial(m, b) - q_int(m) + (m - 1),
    )


def _two_row_bicsp(m: int, b: int, cross_check: bool = False) -> Instance:
    f = QTPoly.in_q(q_int(m - 1)) + QTPoly.in_t(q_binomial(m, b) - q_int(m))
    return Instance(
        name="two-row",
        elements=_two_row_elements(m, b),
        actions=[
            _promotion(m, m, m - 1, cross_check),
            _promotion(m, m - 1, m, cross_check),
        ],
        polynomial=f,
    )


def _three_row_bicsp(m: int, cross_check: bool = False) -> Instance:
    _require(m >= 4, "need m >= 4")
    f = QTPoly.in_t(q_int(m - 2)) + QTPoly.in_q(q_int(m - 1) * (m - 3))
    return Instance(
        name="three-row",
        elements=enumerate_syt_ribbon(Composition(parts=(1, m - 2, 1))),
        actions=[
            _promotion(m, m - 2, m - 1, cross_check),
            _promotion(m, m - 1, m - 2, cross_check),
        ],
        polynomial=f,
    )


INSTANCES: Dict[str, Callable[..., Instance]] = {
    "stretched-hooks": _stretched_hooks,
    "disjoint-rows": _disjoint_rows,
    "rectangle-fixed-content": _rectangle_fixed_content,
    "disjoint-rectangles": _disjoint_rectangles,
    "rectangle": _rectangle,
    "matrices": _matrices,
    "binary-words": _binary_words,
    "words": _words,
    "plane-partitions": _plane_partitions,
    "two-row-m": _two_row_m,
    "two-row-m-minus-1": _two_row_m_minus_1,
}
"""Instances checked by ``csp_check``."""

BICSP_INSTANCES: Dict[str, Callable[..., Instance]] = {
    "two-row": _two_row_bicsp,
    "three-row": _three_row_bicsp,
}
"""Instances checked by ``bicsp_check``."""


def instance_parameters(name: str) -> List[str]:
    """Parameter names a named instance accepts."""
    builder = INSTANCES.get(name) or BICSP_INSTANCES.get(name)
    if builder is None:
        raise UnknownInstanceError(f"unknown instance {name!r}")
    return [p for p in inspect.signature(builder).parameters if p != "cross_check"]


def named_instance(
    name: str, params: Dict[str, Any], cross_check: bool = False
) -> Instance:
    """Build the set, actions and polynomial of a named sieving instance.

    Raises:
        UnknownInstanceError: For an unknown name, missing or unexpected
            parameters, or parameters outside the instance's range.
    """
    builder = INSTANCES.get(name) or BICSP_INSTANCES.get(name)
    if builder is None:
        known = ", ".join(sorted(list(INSTANCES) + list(BICSP_INSTANCES)))
        raise UnknownInstanceError(f"unknown instance {name!r}; known: {known}")
    try:
        inspect.signature(builder).bind(**params, cross_check=cross_check)
    except TypeError as e:
        raise UnknownInstanceError(f"bad parameters for {name}: {e}") from None
    return builder(**params, cross_check=cross_check)


def check_instance(
    instance: Instance,
    threads: int = 1,
    advance: Optional[Callable[[], None]] = None,
) -> CheckReport:
    """Run ``csp_check`` or ``bicsp_check`` on a built instance.

    The instance's exact identities are added to the report's alternatives
    as ``pass`` or ``fail``; they never change its verdict.
    """
    if len(instance.actions) == 2:
        report = bicsp_check(
            instance.elements,
            instance.actions[0],
            instance.actions[1],
            instance.polynomial,
            threads=threads,
            instance=instance.name,
            advance=advance,
        )
    else:
        report = csp_check(
            instance.elements,
            instance.actions[0],
            instance.polynomial,
            threads=threads,
            instance=instance.name,
            shift=instance.shift,
            alternatives=instance.alternatives,
            advance=advance,
        )
    if not instance.identities:
        return report
    alternatives = dict(report.alternatives)
    for label, holds in instance.identities.items():
        alternatives[label] = "pass" if holds else "fail"
    return report.model_copy(update={"alternatives": alternatives})


def family(name: str, params: Dict[str, Any]) -> Tuple[List[Any], int]:
    """Tableaux of a promotion family and the alphabet size they use.

    Families: ``shst`` (a, b, n), ``ribbon`` (alpha), ``sm`` (nu, n),
    ``ssyt`` (shape, content) and ``bounded`` (shape, m).
    """
    try:
        if name == "shst":
            a, b, n = params["a"], params["b"], params["n"]
            return shst(a, b, n), a + b + 1
        if name == "ribbon":
            alpha = _as_composition(params["alpha"])
            return enumerate_syt_ribbon(alpha), alpha.size
        if name == "sm":
            nu = _as_partition(params["nu"])
            return sm_tableaux(nu, params["n"]), nu.size
        if name == "ssyt":
            shape = params["shape"]
            if isinstance(shape, str):
                shape = parse_skew_shape(shape)
            weights = _as_composition(params["content"])
            return enumerate_ssyt(shape, weights), weights.length
        if name == "bounded":
            shape = params["shape"]
            if isinstance(shape, str):
                shape = parse_skew_shape(shape)
            return enumerate_bounded_ssyt(shape, params["m"]), params["m"]
    except KeyError as e:
        raise UnknownInstanceError(f"family {name} needs parameter {e}") from None
    raise UnknownInstanceError(f"unknown family {name!r}")


def orbit_census(
    name: str,
    params: Dict[str, Any],
    threads: int = 1,
    cross_check: bool = False,
    advance: Optional[Callable[[], None]] = None,
) -> OrbitCensus:
    """Promotion orbit sizes (ascending) and order on a named family."""
    elements, m = family(name, params)
    successor = successors(
        elements, lambda t: promote(t, m, cross_check), threads, advance
    )
    orbits = cycles(elements, successor, _rows_key)
    return OrbitCensus(
        family=name,
        alphabet=m,
        size=len(elements),
        sizes=sorted(o.length for o in orbits),
        order=order_of(orbits),
    )
