"""
Graph Family Plugin Registry
"""

import logging
from typing import Dict, List, Type

from app.errors import FamilySpecError
from app.services.graph.generators.base import FamilySpec

logger = logging.getLogger(__name__)


class FamilyRegistry:
    """Registry for graph family plugins"""

    _families: Dict[str, Type[FamilySpec]] = {}

    @classmethod
    def register(cls, name: str, spec_class: Type[FamilySpec]) -> None:
        """
        Register a family plugin.

        Args:
            name: Family name used on the command line (e.g., "cycle")
            spec_class: FamilySpec subclass
        """
        name_lower = name.lower()

        if name_lower in cls._families:
            logger.warning(f"Family '{name}' already registered, overwriting")

        if not issubclass(spec_class, FamilySpec):
            raise ValueError(
                f"Family class must inherit from FamilySpec, got {spec_class}"
            )

        cls._families[name_lower] = spec_class
        logger.info(f"Registered family plugin: {name}")

    @classmethod
    def get(cls, name: str) -> Type[FamilySpec]:
        """
        Get family spec class by name.

        Raises:
            FamilySpecError: If family not found
        """
        name_lower = name.lower()

        if name_lower not in cls._families:
            available = ", ".join(cls.list_families())
            raise FamilySpecError(
                f"Family '{name}' not registered. Available families: {available}"
            )

        return cls._families[name_lower]

    @classmethod
    def list_families(cls) -> List[str]:
        return list(cls._families.keys())

    @classmethod
    def is_registered(cls, name: str) -> bool:
        return name.lower() in cls._families

    @classmethod
    def unregister(cls, name: str) -> None:
        name_lower = name.lower()
        if name_lower in cls._families:
            del cls._families[name_lower]
            logger.info(f"Unregistered family plugin: {name}")
