from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field


class CheckCase(BaseModel):
    polynomial: str
    tag: Optional[str] = None
    problems: List[str] = []

    @property
    def ok(self) -> bool:
        return not self.problems


class CheckReport(BaseModel):
    format: Literal[1] = 1
    seed: Optional[int] = None
    checked: int
    tags: Dict[str, int] = Field(default_factory=dict)
    failures: List[CheckCase] = []
    ok: bool
