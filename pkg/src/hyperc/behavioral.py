"""General and conic hypercontracts over a finite behavior universe.

Components are bitsets over an ordered universe of at most 64 behaviors;
composition of components is intersection and the component quotient is
implication.  Compsets come in two representations: explicit sets of
components (general mode, universes of at most 8 behaviors) and conic
form (the antichain of maximal components of a downward-closed compset).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .errors import LimitExceeded, UniverseTooLarge

MAX_UNIVERSE = 64
GENERAL_MODE_MAX = 8

_QUOTIENT_CHOICE_CAP = 1_000_000


@dataclass(frozen=True)
class Universe:
    """Ordered set of behavior labels; components are bitsets over it."""

    behaviors: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "behaviors", tuple(self.behaviors))
        if not self.behaviors:
            raise UniverseTooLarge("universe must be nonempty")
        if len(self.behaviors) > MAX_UNIVERSE:
            raise UniverseTooLarge(
                f"universe of {len(self.behaviors)} behaviors exceeds the {MAX_UNIVERSE} bound"
            )
        if len(set(self.behaviors)) != len(self.behaviors):
            raise UniverseTooLarge("behavior labels must be distinct")
        object.__setattr__(self, "_pos", {b: k for k, b in enumerate(self.behaviors)})

    @property
    def size(self) -> int:
        return len(self.behaviors)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def index(self, behavior: str) -> int:
        try:
            return self._pos[behavior]  # type: ignore[attr-defined]
        except KeyError:
            raise ValueError(f"unknown behavior {behavior!r}") from None

    def mask_of(self, behaviors: Iterable[str]) -> int:
        m = 0
        for b in behaviors:
            m |= 1 << self.index(b)
        return m

    def names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(b for k, b in enumerate(self.behaviors) if mask >> k & 1)


def _check_universe(a, b) -> None:
    if a.universe != b.universe:
        raise ValueError("universe mismatch")


@dataclass(frozen=True)
class Component:
    """A set of behaviors; composition is ∩ and the quotient is implication."""

    universe: Universe
    mask: int

    def __post_init__(self):
        if self.mask & ~self.universe.full_mask:
            raise ValueError("component leaves its universe")

    @classmethod
    def from_behaviors(cls, universe: Universe, behaviors: Iterable[str]) -> "Component":
        return cls(universe, universe.mask_of(behaviors))

    @classmethod
    def from_predicate(cls, universe: Universe, pred: Callable[[str], bool]) -> "Component":
        return cls(universe, universe.mask_of(b for b in universe.behaviors if pred(b)))

    def behaviors(self) -> tuple[str, ...]:
        return self.universe.names_of(self.mask)

    def __and__(self, other: "Component") -> "Component":
        _check_universe(self, other)
        return Component(self.universe, self.mask & other.mask)

    def __or__(self, other: "Component") -> "Component":
        _check_universe(self, other)
        return Component(self.universe, self.mask | other.mask)

    def complement(self) -> "Component":
        return Component(self.universe, self.universe.full_mask & ~self.mask)

    def issubset(self, other: "Component") -> bool:
        _check_universe(self, other)
        return self.mask & ~other.mask == 0


def component_quotient(c: Component, c2: Component) -> Component:
    """Largest x with c2 ∩ x ⊆ c, namely the implication ¬c2 ∪ c."""
    _check_universe(c, c2)
    return Component(c.universe, _quotient_mask(c.mask, c2.mask, c.universe.full_mask))


# -- mask-level conic core (single source of truth for the wrappers) ----------


def _quotient_mask(target: int, divisor: int, full: int) -> int:
    return (full & ~divisor) | target


def normalize_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Antichain of maximal elements, sorted ascending; denotation unchanged."""
    uniq = sorted(set(masks))
    out = [m for m in uniq if not any(m != o and m & ~o == 0 for o in uniq)]
    return tuple(out)


def leq_masks(ms: tuple[int, ...], ms2: tuple[int, ...]) -> bool:
    return all(any(m & ~m2 == 0 for m2 in ms2) for m in ms)


def compose_masks(ms: tuple[int, ...], ms2: tuple[int, ...]) -> tuple[int, ...]:
    return normalize_masks(m & m2 for m in ms for m2 in ms2)


def join_masks(ms: tuple[int, ...], ms2: tuple[int, ...]) -> tuple[int, ...]:
    return normalize_masks(itertools.chain(ms, ms2))


def quotient_masks(ms: tuple[int, ...], ms2: tuple[int, ...], full: int) -> tuple[int, ...]:
    """Maximals of the residual: one meet  ⋀_{M'∈ms2} M(M')/M'  per choice
    function M(·): ms2 → ms; at most k^{k'} candidates before pruning."""
    if not ms2:
        return (full,)
    if not ms:
        return ()
    if len(ms) ** len(ms2) > _QUOTIENT_CHOICE_CAP:
        raise LimitExceeded("conic quotient has too many choice functions")
    out = []
    for choice in itertools.product(ms, repeat=len(ms2)):
        acc = full
        for picked, m2 in zip(choice, ms2):
            acc &= _quotient_mask(picked, m2, full)
        out.append(acc)
    return normalize_masks(out)


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class ConicCompset:
    """Downward-closed compset represented by its antichain of maximals."""

    universe: Universe
    maximals: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "maximals", tuple(self.maximals))
        full = self.universe.full_mask
        if any(m & ~full for m in self.maximals):
            raise ValueError("maximal component leaves its universe")
        if self.maximals != normalize_masks(self.maximals):
            raise ValueError("maximals must form a sorted antichain")

    @classmethod
    def from_components(cls, universe: Universe, components: Iterable[Component | int]) -> "ConicCompset":
        masks = [c.mask if isinstance(c, Component) else c for c in components]
        return cls(universe, normalize_masks(masks))

    @classmethod
    def empty(cls, universe: Universe) -> "ConicCompset":
        return cls(universe, ())

    @classmethod
    def full(cls, universe: Universe) -> "ConicCompset":
        return cls(universe, (universe.full_mask,))

    @property
    def k(self) -> int:
        return len(self.maximals)

    def is_empty(self) -> bool:
        return not self.maximals

    def components(self) -> tuple[Component, ...]:
        return tuple(Component(self.universe, m) for m in self.maximals)

    def contains(self, c: Component | int) -> bool:
        m = c.mask if isinstance(c, Component) else c
        return any(m & ~mx == 0 for mx in self.maximals)

    def leq(self, other: "ConicCompset") -> bool:
        _check_universe(self, other)
        return leq_masks(self.maximals, other.maximals)

    def compose(self, other: "ConicCompset") -> "ConicCompset":
        _check_universe(self, other)
        return ConicCompset(self.universe, compose_masks(self.maximals, other.maximals))

    def meet(self, other: "ConicCompset") -> "ConicCompset":
        # Intersection of downward-closed sets; coincides with composition
        # because component composition is idempotent.
        return self.compose(other)

    def join(self, other: "ConicCompset") -> "ConicCompset":
        _check_universe(self, other)
        return ConicCompset(self.universe, join_masks(self.maximals, other.maximals))

    def quotient(self, other: "ConicCompset") -> "ConicCompset":
        _check_universe(self, other)
        return ConicCompset(
            self.universe,
            quotient_masks(self.maximals, other.maximals, self.universe.full_mask),
        )

    def to_general(self) -> "GeneralCompset":
        members = set()
        for m in self.maximals:
            members.update(_submasks(m))
        return GeneralCompset(self.universe, frozenset(members))


def normalize_conic(universe: Universe, components: Iterable[Component | int]) -> ConicCompset:
    return ConicCompset.from_components(universe, components)


def conic_leq(a: ConicCompset, b: ConicCompset) -> bool:
    return a.leq(b)


def conic_compose(a: ConicCompset, b: ConicCompset) -> ConicCompset:
    return a.compose(b)


def conic_meet(a: ConicCompset, b: ConicCompset) -> ConicCompset:
    return a.meet(b)


def conic_join(a: ConicCompset, b: ConicCompset) -> ConicCompset:
    return a.join(b)


def conic_quotient(a: ConicCompset, b: ConicCompset) -> ConicCompset:
    return a.quotient(b)


# -- general mode --------------------------------------------------------------


@dataclass(frozen=True)
class GeneralCompset:
    """Explicit set of components; exact but exponential, so tiny universes only."""

    universe: Universe
    members: frozenset[int]

    def __post_init__(self):
        if self.universe.size > GENERAL_MODE_MAX:
            raise UniverseTooLarge(
                f"universe too large for general mode (> {GENERAL_MODE_MAX} behaviors)"
            )
        object.__setattr__(self, "members", frozenset(self.members))
        full = self.universe.full_mask
        if any(m & ~full for m in self.members):
            raise ValueError("member component leaves its universe")

    @classmethod
    def from_components(cls, universe: Universe, components: Iterable[Component | int]) -> "GeneralCompset":
        return cls(universe, frozenset(c.mask if isinstance(c, Component) else c for c in components))

    def contains(self, c: Component | int) -> bool:
        m = c.mask if isinstance(c, Component) else c
        return m in self.members

    def leq(self, other: "GeneralCompset") -> bool:
        _check_universe(self, other)
        return self.members <= other.members

    def compose(self, other: "GeneralCompset") -> "GeneralCompset":
        _check_universe(self, other)
        return GeneralCompset(
            self.universe, frozenset(m & m2 for m in self.members for m2 in other.members)
        )

    def meet(self, other: "GeneralCompset") -> "GeneralCompset":
        _check_universe(self, other)
        return GeneralCompset(self.universe, self.members & other.members)

    def join(self, other: "GeneralCompset") -> "GeneralCompset":
        _check_universe(self, other)
        return GeneralCompset(self.universe, self.members | other.members)

    def quotient(self, other: "GeneralCompset") -> "GeneralCompset":
        """{ M | {M} × H' ⊆ H }, evaluated literally over the whole universe."""
        _check_universe(self, other)
        full = self.universe.full_mask
        out = frozenset(
            m
            for m in range(full + 1)
            if all(m & m2 in self.members for m2 in other.members)
        )
        return GeneralCompset(self.universe, out)

    def is_downward_closed(self) -> bool:
        return all(
            (m & ~(1 << k)) in self.members
            for m in self.members
            for k in range(self.universe.size)
            if m >> k & 1
        )

    def maximals(self) -> ConicCompset:
        return ConicCompset(self.universe, normalize_masks(self.members)) if self.members else ConicCompset.empty(self.universe)


def general_compose(a: GeneralCompset, b: GeneralCompset) -> GeneralCompset:
    return a.compose(b)


def general_quotient(a: GeneralCompset, b: GeneralCompset) -> GeneralCompset:
    return a.quotient(b)


def general_meet(a: GeneralCompset, b: GeneralCompset) -> GeneralCompset:
    return a.meet(b)


def general_join(a: GeneralCompset, b: GeneralCompset) -> GeneralCompset:
    return a.join(b)


@dataclass(frozen=True)
class ConvexityReport:
    convex: bool
    coconvex: bool

    @property
    def flat(self) -> bool:
        return self.convex and self.coconvex


def convexity(h: GeneralCompset) -> ConvexityReport:
    """Literal checks: H convex iff H×H ≤ H, co-convex iff H ≤ H×H."""
    squared = h.compose(h)
    return ConvexityReport(convex=squared.leq(h), coconvex=h.leq(squared))


def is_saturated(env: GeneralCompset, closed: GeneralCompset) -> bool:
    """Fixpoint condition E = S / (S / E): the environments are as large as
    possible without shrinking the implementations."""
    _check_universe(env, closed)
    return closed.quotient(closed.quotient(env)).members == env.members


# -- hypercontracts --------------------------------------------------------------


@dataclass(frozen=True)
class BehavioralHypercontract:
    """Pair (environments, implementations) of conic compsets."""

    env: ConicCompset
    impl: ConicCompset

    def __post_init__(self):
        _check_universe(self.env, self.impl)

    @property
    def universe(self) -> Universe:
        return self.env.universe

    def is_compatible(self) -> bool:
        return not self.env.is_empty()

    def is_consistent(self) -> bool:
        return not self.impl.is_empty()

    def mirror(self) -> "BehavioralHypercontract":
        return BehavioralHypercontract(self.impl, self.env)


def contract_refines(c: BehavioralHypercontract, c2: BehavioralHypercontract) -> bool:
    """c ≤ c2: environments of c2 inside c's, implementations of c inside c2's."""
    return c2.env.leq(c.env) and c.impl.leq(c2.impl)


def contract_compose(c: BehavioralHypercontract, c2: BehavioralHypercontract) -> BehavioralHypercontract:
    """(E/I' ∧ E'/I, I × I')."""
    env = c.env.quotient(c2.impl).meet(c2.env.quotient(c.impl))
    return BehavioralHypercontract(env, c.impl.compose(c2.impl))


def contract_quotient(c: BehavioralHypercontract, c2: BehavioralHypercontract) -> BehavioralHypercontract:
    """(E × I', I/I' ∧ E'/E)."""
    impl = c.impl.quotient(c2.impl).meet(c2.env.quotient(c.env))
    return BehavioralHypercontract(c.env.compose(c2.impl), impl)


def contract_meet(c: BehavioralHypercontract, c2: BehavioralHypercontract) -> BehavioralHypercontract:
    """(E ∪ E', I ∩ I'): the GLB (weak merge)."""
    return BehavioralHypercontract(c.env.join(c2.env), c.impl.meet(c2.impl))


def contract_join(c: BehavioralHypercontract, c2: BehavioralHypercontract) -> BehavioralHypercontract:
    """(E ∩ E', I ∪ I'): the LUB."""
    return BehavioralHypercontract(c.env.meet(c2.env), c.impl.join(c2.impl))


# -- general-mode contract pairs (used by the oracle and the strong merge) -------


GeneralContract = tuple[GeneralCompset, GeneralCompset]


def general_contract_compose(c: GeneralContract, c2: GeneralContract) -> GeneralContract:
    (e, i), (e2, i2) = c, c2
    return e.quotient(i2).meet(e2.quotient(i)), i.compose(i2)


def general_contract_meet(c: GeneralContract, c2: GeneralContract) -> GeneralContract:
    (e, i), (e2, i2) = c, c2
    return e.join(e2), i.meet(i2)


def general_contract_join(c: GeneralContract, c2: GeneralContract) -> GeneralContract:
    (e, i), (e2, i2) = c, c2
    return e.meet(e2), i.join(i2)


def general_contract_mirror(c: GeneralContract) -> GeneralContract:
    e, i = c
    return i, e


def strong_merge_general(c: GeneralContract, c2: GeneralContract) -> GeneralContract:
    """Strong merge in general mode: environments shared by both viewpoints,
    closed systems conjoined, implementations re-derived by quotient."""
    (e, i), (e2, i2) = c, c2
    env = e.meet(e2)
    closed = e.compose(i).meet(e2.compose(i2))
    return env, closed.quotient(env)


# -- the assume-guarantee bridge ---------------------------------------------------


@dataclass(frozen=True)
class AgContract:
    """Assume-guarantee contract: a pair of trace properties (A, G)."""

    assumptions: Component
    guarantees: Component

    def __post_init__(self):
        _check_universe(self.assumptions, self.guarantees)

    @property
    def universe(self) -> Universe:
        return self.assumptions.universe


def ag_to_contract(ag: AgContract) -> BehavioralHypercontract:
    """Environments ⟨A⟩ and implementations ⟨G/A⟩, both 1-conic."""
    u = ag.universe
    env = ConicCompset(u, (ag.assumptions.mask,))
    impl = ConicCompset(u, (component_quotient(ag.guarantees, ag.assumptions).mask,))
    return BehavioralHypercontract(env, impl)


def ag_compose(ag: AgContract, ag2: AgContract) -> AgContract:
    """AG composition matching contract composition under the bridge:
    G = (G1/A1) ∩ (G2/A2) and A = (A1 ∩ A2) ∪ ¬G."""
    _check_universe(ag.assumptions, ag2.assumptions)
    g = component_quotient(ag.guarantees, ag.assumptions) & component_quotient(
        ag2.guarantees, ag2.assumptions
    )
    a = (ag.assumptions & ag2.assumptions) | g.complement()
    return AgContract(a, g)


def ag_merge_strong(ag: AgContract, ag2: AgContract) -> AgContract:
    """Viewpoint fusion with strong assumptions: (A1 ∩ A2, G1 ∩ G2)."""
    _check_universe(ag.assumptions, ag2.assumptions)
    return AgContract(ag.assumptions & ag2.assumptions, ag.guarantees & ag2.guarantees)


def ag_merge_weak(ag: AgContract, ag2: AgContract) -> BehavioralHypercontract:
    """Viewpoint fusion as the GLB of the bridged hypercontracts."""
    return contract_meet(ag_to_contract(ag), ag_to_contract(ag2))


# -- enumeration helpers (oracle and exhaustive tests) ------------------------------


def all_antichains(universe: Universe) -> list[tuple[int, ...]]:
    """All antichains of components (= all conic compsets) over a tiny universe."""
    if universe.size > 4:
        raise UniverseTooLarge("antichain enumeration is meant for |B| ≤ 4")
    masks = list(range(universe.full_mask + 1))
    out: list[tuple[int, ...]] = []

    def extend(start: int, chosen: tuple[int, ...]) -> None:
        out.append(chosen)
        for m in masks[start:]:
            if all(m & ~c and c & ~m for c in chosen):
                extend(m + 1, chosen + (m,))

    extend(0, ())
    return [tuple(sorted(c)) for c in out]
