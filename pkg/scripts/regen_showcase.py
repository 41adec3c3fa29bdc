"""Regenerate the checked-in showcase modules in src/gtrans/generated/.

    python scripts/regen_showcase.py          # rewrite the files
    python scripts/regen_showcase.py --check  # exit 1 if anything is stale
"""
import argparse
import json
import sys

from gtrans.codegen import manifest, write_outputs
from gtrans.showcase import SHOWCASE_DIR, generate_showcase


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    units = generate_showcase()
    if not args.check:
        for path in write_outputs(units, SHOWCASE_DIR):
            print(path)
        return 0
    stale = []
    for u in units:
        for name, text in u.files().items():
            path = SHOWCASE_DIR / name
            if not path.exists() or path.read_text(encoding="utf-8") != text:
                stale.append(name)
    m = SHOWCASE_DIR / "manifest.json"
    if m.read_text(encoding="utf-8") != json.dumps(manifest(units), indent=2) + "\n":
        stale.append(m.name)
    for name in stale:
        print(f"stale: {name}", file=sys.stderr)
    return 1 if stale else 0


if __name__ == "__main__":
    sys.exit(main())
