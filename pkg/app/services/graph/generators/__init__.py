from app.services.graph.generators.base import FamilySpec
from app.services.graph.generators.registry import FamilyRegistry
from app.services.graph.generators.specs import BUILTIN_FAMILIES, generate_family

__all__ = ["BUILTIN_FAMILIES", "FamilyRegistry", "FamilySpec", "generate_family"]
