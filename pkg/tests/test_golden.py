"""Every worked example runs against a checked-in golden snapshot."""

import json
import sys
from pathlib import Path

import pytest

from ginv.iojson import dumps_canonical

from golden_cases import CASES

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    expected = json.loads((GOLDEN / f"{name}.json").read_text())
    actual = CASES[name]()
    assert dumps_canonical(actual) == dumps_canonical(expected)


def test_no_orphan_golden_files():
    on_disk = {p.stem for p in GOLDEN.glob("*.json")}
    assert on_disk == set(CASES)


def main() -> int:
    # regeneration helper: python3 tests/test_golden.py --write
    if "--write" not in sys.argv:
        print("usage: test_golden.py --write", file=sys.stderr)
        return 2
    GOLDEN.mkdir(exist_ok=True)
    for name in sorted(CASES):
        path = GOLDEN / f"{name}.json"
        path.write_text(json.dumps(CASES[name](), indent=2, sort_keys=True)
                        + "\n")
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.path.insert(0, str(Path(__file__).parent))
    sys.exit(main())
