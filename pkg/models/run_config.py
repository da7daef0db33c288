"""
CLI run configuration
"""

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from models.plot_spec import UINT64_MAX


class RunConfig(BaseModel):
    """One CLI invocation; override fields beat the spec file when set"""
    model_config = ConfigDict(frozen=True)

    data_path: Path
    spec_path: Path
    out_path: Path

    # Overrides
    width: Optional[float] = Field(default=None, gt=0)
    height: Optional[float] = Field(default=None, gt=0)
    projection: Optional[str] = None
    interactive: Optional[bool] = None
    seed: Optional[int] = Field(default=None, ge=0, le=UINT64_MAX)

    log_level: str = "WARNING"
