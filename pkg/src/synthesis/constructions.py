"""Dynamical systems whose reachability relation is a given preorder frame."""

import itertools
import logging
from typing import Dict, List, Optional

import networkx as nx

from src.coalgebra.interfaces import Partition
from src.errors import (
    CarrierMismatchError,
    ConstructionGapError,
    NotPreorderError,
    PreconditionViolatedError,
    SearchBoundExceededError,
)
from src.timecore.dynamics import reachability
from src.timecore.interfaces import DynSystem, TimeMonoid

from .classifier import FrameClassifier
from .interfaces import Frame

logger = logging.getLogger(__name__)


def _frame_graph(fr: Frame) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(fr.worlds)
    graph.add_edges_from(fr.edges())
    return graph


def _require_preorder(classifier: FrameClassifier) -> None:
    witness = classifier.preorder()
    if witness is not None:
        raise NotPreorderError("Relation is not a preorder", witness)


def scc_partition(fr: Frame) -> Partition:
    """Strongly connected components of a preorder, i.e. its mutual-reachability classes."""
    _require_preorder(FrameClassifier(fr))
    index: Dict[str, int] = {}
    for i, component in enumerate(nx.strongly_connected_components(_frame_graph(fr))):
        for world in component:
            index[world] = i
    return Partition.from_index(fr.worlds, index)


def _cycle(block) -> Dict[str, str]:
    return {w: block[(i + 1) % len(block)] for i, w in enumerate(block)}


def synthesize_invertible(fr: Frame) -> DynSystem:
    """Int time: the 1-step cycles every equivalence class in declaration order."""
    classifier = FrameClassifier(fr)
    _require_preorder(classifier)
    witness = classifier.symmetric()
    if witness is not None:
        raise PreconditionViolatedError("Invertible synthesis needs a symmetric preorder", witness)

    step: Dict[str, str] = {}
    for block in scc_partition(fr).blocks:
        step.update(_cycle(block))
    logger.info(f"Synthesized int-time system over {len(fr.worlds)} worlds")
    return DynSystem.build(TimeMonoid.int_(), fr.worlds, {1: step})


def least_successor(classifier: FrameClassifier, x: str) -> str:
    """The first world (declaration order) of the least scc strictly above x."""
    r = classifier.r
    successors = [y for y in classifier.worlds if r(x, y) and not r(y, x)]
    return next(y for y in successors if all(r(y, z) for z in successors))


def synthesize_linear(fr: Frame) -> DynSystem:
    """Nat time: transient worlds step to their least successor, terminal sccs cycle.

    Only sound when every transient world is alone in its scc; other frames
    are rejected with a ConstructionGapError naming the offending scc.
    """
    classifier = FrameClassifier(fr)
    _require_preorder(classifier)
    witness = classifier.nonbranching()
    if witness is not None:
        raise PreconditionViolatedError("Linear-time synthesis needs a non-branching preorder", witness)
    witness = classifier.transient_scc_singleton()
    if witness is not None:
        raise ConstructionGapError(
            f"World '{witness[0]}' is transient but shares its scc, so no least-successor step reaches it back",
            witness,
        )

    step: Dict[str, str] = {}
    for block in scc_partition(fr).blocks:
        if classifier.is_transient(block[0]):
            step[block[0]] = least_successor(classifier, block[0])
        else:
            step.update(_cycle(block))
    logger.info(f"Synthesized nat-time system over {len(fr.worlds)} worlds")
    return DynSystem.build(TimeMonoid.nat(), fr.worlds, {1: step})


def synthesize_general(fr: Frame) -> DynSystem:
    """Free-monoid time with K generators, K the largest R-image; generator i picks the i-th image (cyclically)."""
    _require_preorder(FrameClassifier(fr))
    images = {x: fr.image(x) for x in fr.worlds}
    size = max(len(image) for image in images.values())
    steps = {
        i: {x: image[i % len(image)] for x, image in images.items()}
        for i in range(size)
    }
    logger.info(f"Synthesized free-time system with {size} generators over {len(fr.worlds)} worlds")
    return DynSystem.build(TimeMonoid.free(size), fr.worlds, steps)


def reachability_frame(sys: DynSystem) -> Frame:
    """The orbital frame of a system: x R y iff y lies in the orbit of x."""
    orbits = reachability(sys)
    return Frame(
        worlds=sys.states,
        relation=frozenset((x, y) for x, orbit in orbits.items() for y in orbit),
    )


def verify_synthesis(fr: Frame, sys: DynSystem) -> bool:
    """Compare the frame relation with reachability computed on the step graph."""
    if set(sys.states) != set(fr.worlds):
        raise CarrierMismatchError(
            f"System states {sorted(sys.states)} differ from frame worlds {sorted(fr.worlds)}"
        )
    graph = nx.DiGraph()
    graph.add_nodes_from(sys.states)
    for table in sys.steps.values():
        graph.add_edges_from(table.items())
    reached = frozenset(
        (x, y) for x in sys.states for y in nx.descendants(graph, x) | {x}
    )
    if reached != fr.relation:
        logger.info(
            f"Reachability mismatch: missing {sorted(fr.relation - reached)}, "
            f"extra {sorted(reached - fr.relation)}"
        )
        return False
    return True


def _functional_orbit(step: Dict[str, str], x: str) -> List[str]:
    seen = [x]
    while step[seen[-1]] not in seen:
        seen.append(step[seen[-1]])
    return seen


def exhaustive_nat_realization(fr: Frame, max_worlds: int = 7) -> Optional[DynSystem]:
    """Search every step function on the worlds for a nat-time system with reachability R."""
    n = len(fr.worlds)
    if n > max_worlds:
        raise SearchBoundExceededError(f"Exhaustive search over {n}^{n} step functions exceeds {max_worlds} worlds")
    for images in itertools.product(fr.worlds, repeat=n):
        step = dict(zip(fr.worlds, images))
        if all(
            set(_functional_orbit(step, x)) == set(fr.image(x)) for x in fr.worlds
        ):
            logger.info(f"Nat-time realization found: {step}")
            return DynSystem.build(TimeMonoid.nat(), fr.worlds, {1: step})
    logger.info(f"No nat-time realization among {n ** n} step functions")
    return None
