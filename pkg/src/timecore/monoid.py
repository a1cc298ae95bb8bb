"""Monoid operations and the derived monoid order a <= b iff a + c = b."""

from typing import Optional

from .interfaces import OrderProfile, TimeMonoid, TimeValue, TimeVariant


def mon_add(m: TimeMonoid, a: TimeValue, b: TimeValue) -> TimeValue:
    return m.add(a, b)


def mon_leq(m: TimeMonoid, a: TimeValue, b: TimeValue) -> Optional[TimeValue]:
    """Return a witness c with a + c = b, or None when a is not below b."""
    m.check(a)
    m.check(b)
    if m.variant == TimeVariant.INT:
        return b - a
    if m.variant == TimeVariant.NAT:
        return b - a if b >= a else None
    if b[:len(a)] == a:
        return b[len(a):]
    return None


def mon_classify(m: TimeMonoid) -> OrderProfile:
    """Classify the monoid order of a built-in time monoid.

    Int is a group, so its order is the full relation. Free monoids with
    two or more generators branch at the identity; with a single generator
    they are isomorphic to Nat.
    """
    if m.variant == TimeVariant.INT:
        return OrderProfile(linear=True, symmetric=True, nonbranching=True)
    if m.variant == TimeVariant.NAT or len(m.generators) == 1:
        return OrderProfile(linear=True, symmetric=False, nonbranching=True)
    return OrderProfile(linear=False, symmetric=False, nonbranching=False)
