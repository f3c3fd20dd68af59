"""The identity catalogue: every check the harness knows, with sample points and default orders."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass
from typing import Any

from mocktheta.algebra.cyclotomic import ALPHA, I, ONE, SQRT2, SQRT3, ZERO, CycNum, zeta_pow
from mocktheta.algebra.partitions import MAX_N
from mocktheta.algebra.series import Monomial, QSeries
from mocktheta.identities import entries, toolbox, transforms

Builder = Callable[..., tuple[QSeries, QSeries]]

SUITES = ("prelim", "props", "entries")
ENTRY_GROUPS = ("entry1", "entry2", "entry3", "entry4")
SELECTORS = ("all", *SUITES, *ENTRY_GROUPS)

MIN_ORDER = 10
PRELIM_ORDER = 60
TRIPLE_PRODUCT_ORDER = 100
ENTRY_ORDER = 40
THETA_CHAIN_ORDER = 60


@dataclass(frozen=True)
class IdentityCheck:
    """One identity at one parameter binding: builder(order, **params) -> (lhs, rhs)."""

    id: str
    suite: str
    group: str
    order: int
    builder: Builder
    params: tuple[tuple[str, Any], ...] = ()
    expect_error: bool = False
    # highest order one side can be built to (the partition oracle stops at MAX_N)
    max_order: int | None = None

    def __post_init__(self):
        if self.order < MIN_ORDER:
            raise ValueError(f"{self.id}: order {self.order} below {MIN_ORDER}")
        if self.suite not in SUITES:
            raise ValueError(f"{self.id}: unknown suite {self.suite!r}")
        if self.max_order is not None and self.max_order < self.order:
            raise ValueError(f"{self.id}: max_order {self.max_order} below default order {self.order}")

    def target(self, order: int | None = None) -> int:
        """Order the sides are compared to: the request, or the default, capped at max_order."""
        order = order or self.order
        if self.max_order is not None:
            order = min(order, self.max_order)
        return order

    def build(self, order: int | None = None) -> tuple[QSeries, QSeries]:
        return self.builder(self.target(order), **dict(self.params))


def _label(value: Any) -> str:
    if isinstance(value, Monomial):
        return value.label()
    if isinstance(value, CycNum):
        return Monomial(value).label() if value else "0"
    if hasattr(value, "label"):
        return value.label()
    return str(value)


def _check(
    name: str,
    suite: str,
    group: str,
    order: int,
    builder: Builder,
    expect_error: bool = False,
    *,
    max_order: int | None = None,
    **params: Any,
) -> IdentityCheck:
    if params:
        binding = ",".join(f"{k}={_label(v)}" for k, v in params.items())
        name = f"{name}[{binding}]"
    return IdentityCheck(name, suite, group, order, builder, tuple(params.items()), expect_error, max_order)


def _prelim() -> list[IdentityCheck]:
    out = []
    for k, spec in enumerate(toolbox.triple_product_specs()):
        out.append(
            _check(
                f"theta.triple_product.{k:02d}", "prelim", "theta", TRIPLE_PRODUCT_ORDER,
                toolbox.triple_product, spec=spec,
            )
        )
    families = {
        "theta.quasi_period": toolbox.quasi_period,
        "theta.reflection": toolbox.reflection,
        "theta.square": toolbox.square,
        "theta.duplication": toolbox.duplication,
    }
    for name, builder in families.items():
        for x in toolbox.TOOLBOX_POINTS:
            out.append(_check(name, "prelim", "theta", PRELIM_ORDER, builder, x=x))
    for x in toolbox.DISSECTION_POINTS:
        for parts in (2, 3, 5):
            out.append(
                _check("theta.dissection", "prelim", "theta", PRELIM_ORDER, toolbox.dissection, x=x, parts=parts)
            )
    for name in toolbox.PRODUCT_FORMS:
        out.append(
            IdentityCheck(
                f"theta.product.{name}", "prelim", "theta", PRELIM_ORDER, toolbox.product_form,
                (("name", name),),
            )
        )
    return out


QUARTIC_POINTS = (
    Monomial(ALPHA),
    Monomial(zeta_pow(1)),
    Monomial(I),
    Monomial(-zeta_pow(2)),
    Monomial(zeta_pow(5)),
)
Z1_POINTS = (Monomial(zeta_pow(2)), Monomial(zeta_pow(1)), Monomial(zeta_pow(5)), Monomial(ALPHA))
RANK_RELATION_POINTS = (
    Monomial(I),
    Monomial(ALPHA),
    Monomial(-ALPHA),
    Monomial(zeta_pow(1)),
    Monomial(zeta_pow(2)),
    Monomial(-zeta_pow(2)),
)
F_VALUES = (SQRT2, SQRT3, ONE, -ONE, ZERO)
RANK_SPECIALIZATIONS = (Monomial(ONE), Monomial(-ONE), Monomial(I), Monomial(-ALPHA))

# (which, x, dilation); the first two are the instances used by the fourth entry
THREE_TERM_SAMPLES = (
    ("plus", Monomial(-ONE), 2),
    ("minus", Monomial(ONE, 4), 2),
    ("plus", Monomial(zeta_pow(1), 1), 1),
    ("minus", Monomial(zeta_pow(2)), 1),
    ("plus", Monomial(-ONE, 1), 1),
    ("minus", Monomial(ALPHA), 1),
)


def _props() -> list[IdentityCheck]:
    out = []
    for x in QUARTIC_POINTS:
        out.append(_check("gfunc.quartic", "props", "gfunc", 30, transforms.quartic, x=x))
    out.append(
        _check("gfunc.quartic", "props", "gfunc", 40, transforms.quartic, x=Monomial(zeta_pow(1), 1))
    )
    for x, z in transforms.APPELL_PAIRS:
        out.append(_check("gfunc.appell_lerch", "props", "gfunc", 30, transforms.appell_lerch, x=x, z=z))
    for x in Z1_POINTS:
        out.append(_check("gfunc.appell_lerch_z1", "props", "gfunc", 30, transforms.appell_lerch_z1, x=x))
    for x, z in transforms.APPELL_PAIRS[:2]:
        for modulus in (1, 3):
            out.append(
                _check(
                    "appell.window", "props", "appell", 30, transforms.appell_window_stability,
                    x=x, z=z, modulus=modulus,
                )
            )
    out.append(
        _check("gfunc.base_change", "props", "gfunc", 40, transforms.base_change, x=Monomial(ALPHA), modulus=2)
    )
    for x in RANK_RELATION_POINTS:
        out.append(_check("rank.relation", "props", "rank", 50, transforms.rank_relation, x=x))
    for a in F_VALUES:
        out.append(_check("rank.f_as_rank", "props", "rank", 50, transforms.f_as_rank, a=a))
    out.append(_check("rank.phi_tilde_as_f0", "props", "rank", 50, transforms.phi_tilde_as_f0))
    for which, x, dilation in THREE_TERM_SAMPLES:
        out.append(
            _check(
                f"three_term.{which}", "props", "three_term", THETA_CHAIN_ORDER, transforms.three_term,
                which=which, x=x, dilation=dilation,
            )
        )
    for x in RANK_SPECIALIZATIONS:
        out.append(
            _check(
                "rank.specialization", "props", "rank", 30, transforms.rank_specialization,
                max_order=MAX_N, x=x,
            )
        )
    out.append(
        _check(
            "rank.enumeration", "props", "rank", 25, transforms.rank_enumeration,
            max_order=MAX_N, x=Monomial(zeta_pow(1)),
        )
    )
    return out


ENTRY1_BUILDERS = {
    "reduced": entries.entry1_reduced,
    "original": entries.entry1_original,
    "g_form": entries.entry1_g_form,
    "theta_form": entries.entry1_theta_form,
    "numerator": entries.entry1_numerator,
}
ENTRY2_BUILDERS = {
    "reduced": entries.entry2_reduced,
    "original": entries.entry2_original,
    "g_sum": entries.entry2_g_sum,
    "appell_sum": entries.entry2_appell_sum,
    "product_side": entries.entry2_product_side,
}
ENTRY3_BUILDERS = {
    "original": entries.entry3_original,
    "product": entries.entry3_product,
    "rearranged": entries.entry3_rearranged,
    "from_entry1": entries.entry3_from_entry1,
}
# name -> (builder, order); G-based layers at the entry order, theta-only layers deeper
ENTRY4_BUILDERS: dict[str, tuple[Builder, int]] = {
    "original": (entries.entry4_original, ENTRY_ORDER),
    "divided": (entries.entry4_divided, ENTRY_ORDER),
    "rotated": (entries.entry4_rotated, ENTRY_ORDER),
    "g_at_i": (entries.entry4_g_at_i, ENTRY_ORDER),
    "g_at_i_neg": (entries.entry4_g_at_i_neg, ENTRY_ORDER),
    "g_at_alpha": (entries.entry4_g_at_alpha, ENTRY_ORDER),
    "g_at_alpha_rotated": (entries.entry4_g_at_alpha_rotated, ENTRY_ORDER),
    "lhs_theta": (entries.entry4_lhs_theta, ENTRY_ORDER),
    "rhs_theta": (entries.entry4_rhs_theta, ENTRY_ORDER),
    "theta_pair": (entries.entry4_theta_pair, THETA_CHAIN_ORDER),
    "theta_iq": (entries.entry4_theta_iq, THETA_CHAIN_ORDER),
    "phi_alpha": (entries.entry4_phi_alpha, THETA_CHAIN_ORDER),
    "theta_at_i": (entries.entry4_theta_at_i, THETA_CHAIN_ORDER),
    "core": (entries.entry4_core, THETA_CHAIN_ORDER),
    "expanded": (entries.entry4_expanded, THETA_CHAIN_ORDER),
    "three_term_plus": (entries.entry4_three_term_plus, THETA_CHAIN_ORDER),
    "three_term_minus": (entries.entry4_three_term_minus, THETA_CHAIN_ORDER),
}


def entry_checks(
    group: str,
    t_values: Iterable[Monomial] | None = None,
    expect_error: bool = False,
) -> list[IdentityCheck]:
    """Checks for one entry; entry1 and entry2 take t samples."""
    out = []
    if group in ("entry1", "entry2"):
        builders = ENTRY1_BUILDERS if group == "entry1" else ENTRY2_BUILDERS
        for t in t_values or ():
            for name, builder in builders.items():
                out.append(
                    _check(f"{group}.{name}", "entries", group, ENTRY_ORDER, builder, expect_error, t=t)
                )
    elif group == "entry3":
        for name, builder in ENTRY3_BUILDERS.items():
            out.append(_check(f"entry3.{name}", "entries", group, ENTRY_ORDER, builder))
    elif group == "entry4":
        for name, (builder, order) in ENTRY4_BUILDERS.items():
            out.append(_check(f"entry4.{name}", "entries", group, order, builder))
        for which in entries.DISSECTIONS:
            out.append(
                IdentityCheck(
                    f"entry4.dissection.{which}", "entries", group, THETA_CHAIN_ORDER,
                    entries.entry4_dissections, (("which", which),),
                )
            )
    else:
        raise ValueError(f"unknown entry group {group!r}")
    return out


DEFAULT_SAMPLES: dict[str, tuple[Monomial, ...]] = {
    "entry1": entries.ENTRY1_SAMPLES,
    "entry2": entries.ENTRY2_SAMPLES,
}
DEGENERATE_SAMPLES: dict[str, tuple[Monomial, ...]] = {
    "entry1": entries.ENTRY1_DEGENERATE,
    "entry2": entries.ENTRY2_DEGENERATE,
}


def _entries(samples: Mapping[str, Iterable[Monomial]]) -> list[IdentityCheck]:
    out = []
    for group in ("entry1", "entry2"):
        out += entry_checks(group, samples.get(group, DEFAULT_SAMPLES[group]))
        for t in DEGENERATE_SAMPLES[group]:
            out.append(
                _check(
                    f"{group}.degenerate", "entries", group, ENTRY_ORDER,
                    ENTRY1_BUILDERS["reduced"] if group == "entry1" else ENTRY2_BUILDERS["reduced"],
                    True, t=t,
                )
            )
    out += entry_checks("entry3")
    out += entry_checks("entry4")
    return out


def build_catalogue(samples: Mapping[str, Iterable[Monomial]] | None = None) -> list[IdentityCheck]:
    """Every check, sorted by id; ``samples`` overrides the entry1/entry2 t lists."""
    checks = _prelim() + _props() + _entries(samples or {})
    seen: set[str] = set()
    for check in checks:
        if check.id in seen:
            raise ValueError(f"duplicate check id {check.id}")
        seen.add(check.id)
    return sorted(checks, key=lambda c: c.id)


def select(selector: str, samples: Mapping[str, Iterable[Monomial]] | None = None) -> list[IdentityCheck]:
    """all | prelim | props | entries | entry1..entry4."""
    if selector not in SELECTORS:
        raise ValueError(f"unknown suite {selector!r}; expected one of {', '.join(SELECTORS)}")
    checks = build_catalogue(samples)
    if selector == "all":
        return checks
    if selector in SUITES:
        return [c for c in checks if c.suite == selector]
    return [c for c in checks if c.group == selector]


def find(check_id: str) -> IdentityCheck:
    for check in build_catalogue():
        if check.id == check_id:
            return check
    raise KeyError(check_id)
