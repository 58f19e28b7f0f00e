import os
import pathlib

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"


def check_golden(name: str, text: str):
    """Compare against a stored golden file; set GRADUS_REGEN_GOLDEN=1 to
    regenerate the stored outputs instead."""
    path = GOLDEN_DIR / name
    if os.environ.get("GRADUS_REGEN_GOLDEN"):
        GOLDEN_DIR.mkdir(exist_ok=True)
        path.write_text(text)
    assert path.read_text() == text, f"golden mismatch for {name}"
