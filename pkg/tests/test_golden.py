"""Regression surface: canonical coproduct renderings at N=4.

Regenerate with ``twistkit export golden --out tests/golden`` after an
intentional change to rendering or ordering.
"""

from pathlib import Path

import pytest

from twistkit.cli import golden_documents

GOLDEN = Path(__file__).parent / "golden"
DOCS = golden_documents(4)


@pytest.mark.parametrize("name", sorted(DOCS))
def test_golden_file(name):
    assert (GOLDEN / name).read_text(encoding="utf-8") == DOCS[name]


def test_golden_set_is_complete():
    assert sorted(p.name for p in GOLDEN.iterdir()) == sorted(DOCS)


def test_omitted_coproducts_are_recorded():
    assert "Δ(H)  [no printed formula]" in DOCS["coproducts_Ftilde.txt"]
    assert "Δ(H)  [no printed formula]" in DOCS["coproducts_Fprime.txt"]
