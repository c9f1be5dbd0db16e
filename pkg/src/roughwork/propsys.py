"""Property systems: objects, properties, and the four basic constructors."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from roughwork.approx import Subset, Universe, UniverseMismatchError


@dataclass(frozen=True)
class PropertySystem:
    """Objects manifesting properties through an explicit pair relation."""

    objects: Universe
    properties: Universe
    manifests: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        pairs = frozenset(tuple(p) for p in self.manifests)
        for g, h in pairs:
            self.objects.index(g)
            self.properties.index(h)
        object.__setattr__(self, "manifests", pairs)

    @classmethod
    def build(
        cls,
        objects: Iterable[str],
        properties: Iterable[str],
        manifests: Iterable[tuple[str, str]],
    ) -> PropertySystem:
        return cls(Universe(objects), Universe(properties), frozenset(manifests))

    def _object_arg(self, a: Subset) -> None:
        if a.universe != self.objects:
            raise UniverseMismatchError(f"{a!r} is not over the object universe")

    def _property_arg(self, b: Subset) -> None:
        if b.universe != self.properties:
            raise UniverseMismatchError(f"{b!r} is not over the property universe")

    def _manifesting_objects(self, prop: str) -> Subset:
        return self.objects.subset(g for g, h in self.manifests if h == prop)

    def _manifested_properties(self, obj: str) -> Subset:
        return self.properties.subset(h for g, h in self.manifests if g == obj)

    def i_diamond(self, a: Subset) -> Subset:
        """Properties manifested by at least one object of a."""
        self._object_arg(a)
        return self.properties.subset(
            h for h in self.properties.atoms if self._manifesting_objects(h).meets(a)
        )

    def e_diamond(self, b: Subset) -> Subset:
        """Objects manifesting at least one property of b."""
        self._property_arg(b)
        return self.objects.subset(
            g for g in self.objects.atoms if self._manifested_properties(g).meets(b)
        )

    def i_box(self, a: Subset) -> Subset:
        """Properties all of whose manifesting objects lie in a."""
        self._object_arg(a)
        return self.properties.subset(
            h
            for h in self.properties.atoms
            if self._manifesting_objects(h).is_subset_of(a)
        )

    def e_box(self, b: Subset) -> Subset:
        """Objects all of whose manifested properties lie in b."""
        self._property_arg(b)
        return self.objects.subset(
            g
            for g in self.objects.atoms
            if self._manifested_properties(g).is_subset_of(b)
        )
