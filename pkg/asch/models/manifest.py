"""
Run manifest written next to every set of emitted artifacts.
"""

from typing import List

from pydantic import BaseModel, Field


class Artifact(BaseModel):
    path: str
    sha256: str
    size: int


class RunManifest(BaseModel):
    command: str
    inputs: List[str] = Field(default_factory=list)
    outdir: str = ""
    artifacts: List[Artifact] = Field(default_factory=list)
