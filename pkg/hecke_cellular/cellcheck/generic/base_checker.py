from abc import ABC, abstractmethod
from typing import Any, Dict


class BaseChecker(ABC):
    """
    Abstract base class for the axiom checkers of the cellcheck harness.

    A checker reads a FilteredAlgebraInstance and returns a report dict of the
    form {"axiom", "status", "checks", "witness"?, "message"?}. Checkers never
    raise on a failed axiom; only malformed input raises.
    """

    axiom: str = "base"

    # config keys understood by every checker, with their defaults
    defaults: Dict[str, Any] = {"max_triples": 64, "seed": 0}

    def __init__(self, config: Dict[str, Any] | None = None):
        """
        Initialize the checker with optional configuration.

        Args:
            config: Dictionary of sampling parameters (`max_triples`, `seed`)
        """
        self.config = {**self.defaults, **(config or {})}

    @abstractmethod
    def check(self, inst: Any) -> Dict[str, Any]:
        """
        Verify one axiom family on the instance.

        Args:
            inst: The FilteredAlgebraInstance to verify

        Returns:
            Dict[str, Any]: the report
        """
        raise NotImplementedError(
            "BaseChecker hasn't supported `check`."
        )

    def validate_config(self) -> bool:
        """
        Validate the configuration of the checker.

        Returns:
            bool: True if every known key holds a non-negative integer
        """
        for key in self.defaults:
            value = self.config.get(key)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                return False
        return True

    def report(self, checks: Dict[str, bool], witness: Dict[str, Any] | None = None,
               message: str = "", **extra) -> Dict[str, Any]:
        """Assemble the report dict; status is 'pass' exactly when every check holds."""
        out: Dict[str, Any] = {
            "axiom": self.axiom,
            "status": "pass" if all(checks.values()) else "fail",
            "checks": dict(checks),
        }
        out.update(extra)
        if witness is not None:
            out["witness"] = witness
        if message:
            out["message"] = message
        return out

    def invalid_config(self) -> Dict[str, Any]:
        return {
            "axiom": self.axiom,
            "status": "error",
            "checks": {},
            "message": f"invalid checker configuration: {self.config}",
        }
