"""Kripke frames: classification, synthesis of dynamical systems and axiom validity."""

from .interfaces import AxiomReport, AxiomScheme, Check, Frame, FrameProfile
from .classifier import FrameClassifier, classify_frame
from .constructions import (
    exhaustive_nat_realization,
    reachability_frame,
    scc_partition,
    synthesize_general,
    synthesize_invertible,
    synthesize_linear,
    verify_synthesis,
)
from .axioms import axiom_profile, axiom_validity, strongest_logic

__all__ = [
    'AxiomReport', 'AxiomScheme', 'Check', 'Frame', 'FrameProfile',
    'FrameClassifier', 'classify_frame',
    'exhaustive_nat_realization', 'reachability_frame', 'scc_partition',
    'synthesize_general', 'synthesize_invertible', 'synthesize_linear', 'verify_synthesis',
    'axiom_profile', 'axiom_validity', 'strongest_logic',
]
