"""Configuration for promotion-sieve."""

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field


class SieveConfig(BaseModel):
    """Settings shared by the command line and the census runner."""

    threads: int = Field(default=1, ge=1)
    """Worker threads for computing promotion images."""

    progress: bool = True
    """Show progress bars on stderr."""

    cross_check: bool = False
    """Recompute every promotion by Bender-Knuth involutions and compare."""

    checkpoint: Optional[Path] = None
    """Sweep results file; passed sweeps recorded there are skipped."""
