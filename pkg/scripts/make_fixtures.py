"""Regenerate fixtures/*.frieze from the transcribed printed arrays."""
import os
import sys

from slkfrieze.fixtures import fixture_documents


def main(target="fixtures"):
    os.makedirs(target, exist_ok=True)
    for name, text in sorted(fixture_documents().items()):
        with open(os.path.join(target, name), "w", encoding="utf-8") as fh:
            fh.write(text)
        print("wrote", os.path.join(target, name))


if __name__ == "__main__":
    main(*sys.argv[1:])
