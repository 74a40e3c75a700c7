"""
Result of one command-line invocation.
"""
import json
import sys
from dataclasses import dataclass
from typing import Any, Optional, TextIO

from src.config.config import Config
from src.core.errors import ExitCode
from src.utils.helpers import to_jsonable


@dataclass
class CommandOutcome:
    exit_code: ExitCode
    payload: Any = None

    @classmethod
    def result(cls, payload) -> 'CommandOutcome':
        return cls(ExitCode.OK, payload)

    @classmethod
    def verdict(cls, holds: bool, payload) -> 'CommandOutcome':
        """Boolean answers: exit 0 when ``holds``, 1 otherwise."""
        return cls(ExitCode.OK if holds else ExitCode.NEGATIVE, payload)

    def to_json(self) -> str:
        return json.dumps(to_jsonable(self.payload), indent=Config.JSON_INDENT, sort_keys=True)

    def emit(self, stream: Optional[TextIO] = None) -> None:
        if self.payload is None:
            return
        stream = stream or sys.stdout
        stream.write(self.to_json() + '\n')
