"""Problem files shipped with the package."""

from importlib import resources
from pathlib import Path


def preset_files() -> list[Path]:
    root = resources.files(__name__)
    return sorted(Path(str(p)) for p in root.iterdir() if p.name.endswith(".json"))
