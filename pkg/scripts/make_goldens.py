#!/usr/bin/env python3
"""Regenerate the golden files in golden/ from the current engine.

Run from the repository root after any deliberate change to the rendering
or report formats, then review the diff before committing.
"""

import json
import pathlib
import sys

from click.testing import CliRunner

from njordan.cli import cli
from njordan.jordan import JordanConfig, emit_certificate

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "golden"


def main():
    GOLDEN.mkdir(exist_ok=True)
    for n in (2, 3, 4):
        cert = emit_certificate(JordanConfig(n))
        (GOLDEN / f"cert_n{n}.txt").write_text(cert.render())
        print(f"wrote cert_n{n}.txt ({len(cert.entries)} entries)")

    runner = CliRunner()
    result = runner.invoke(cli, ["refute", "--n", "4", "--format", "json"])
    if result.exit_code != 0:
        print("refute run failed", file=sys.stderr)
        return 1
    data = json.loads(result.output)
    data["elapsed_ms"] = 0  # timing is not part of the frozen schema
    (GOLDEN / "refute_n4.json").write_text(
        json.dumps(data, indent=2, sort_keys=True) + "\n")
    print("wrote refute_n4.json")
    return 0


if __name__ == "__main__":
    sys.exit(main())
