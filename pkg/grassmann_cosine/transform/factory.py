"""
Factory for builtin and user-defined profiles
"""
from typing import Callable, Dict, List

from ..core.exceptions import ProfileParseError
from .expression import ProfileParser
from .profiles import InvariantFunction

ExpressionBuilder = Callable[[int], str]


def _joined(op: str, term: str) -> ExpressionBuilder:
    return lambda p: op.join(term.format(i=i) for i in range(1, p + 1))


class ProfileFactory:
    """Creates profiles by builtin name or from an expression"""

    def __init__(self, parser: ProfileParser = None):
        self.parser = parser or ProfileParser()
        self._builtins: Dict[str, ExpressionBuilder] = {
            "one": lambda p: "1",
            "prod_cos2": _joined("*", "c{i}"),
            "sum_cos2": _joined(" + ", "c{i}"),
            "cos2_first": lambda p: "c1",
            "cos2_last": lambda p: f"c{p}",
            "quartic": _joined(" + ", "c{i}^2"),
        }

    def create(self, name_or_expression: str, p: int) -> InvariantFunction:
        """Builtin profile by name, otherwise a parsed expression."""
        key = name_or_expression.strip()
        if key.lower() in self._builtins:
            return self.parser.parse(self.expression_for(key, p), p, name=key.lower())
        try:
            return self.parser.parse(key, p)
        except ProfileParseError as e:
            raise ProfileParseError(
                f"{e}. Builtin profiles: {', '.join(self.get_available_profiles())}"
            ) from e

    def get_available_profiles(self) -> List[str]:
        return list(self._builtins.keys())

    def register_profile(self, name: str, builder: ExpressionBuilder) -> None:
        """Register a builtin given as a function p -> expression."""
        self._builtins[name.lower()] = builder

    def expression_for(self, name: str, p: int) -> str:
        """Expression of a builtin profile at rank p."""
        if name.lower() not in self._builtins:
            raise ProfileParseError(f"Unknown builtin profile: {name}")
        return self._builtins[name.lower()](p)


# Global factory instance
profile_factory = ProfileFactory()
