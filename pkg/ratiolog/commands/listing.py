"""Command listing the sequence catalog and the built-in certificates."""

import argparse

from ratiolog.commands import command
from ratiolog.common.catalog import SequenceCatalog
from ratiolog.common.certify import CertificateCatalog
from ratiolog.common.reports import RunReport


@command("list", "List catalog sequences and built-in certificates.")
def list_catalog(unused_args: argparse.Namespace) -> RunReport:
    """Describe every registered sequence and certificate."""
    sequences = [
        {
            "name": sequence.name,
            "kind": sequence.kind.to_json()["kind"],
            "oeis_id": sequence.oeis_id,
            "description": sequence.description,
        }
        for sequence in (SequenceCatalog.get(name) for name in SequenceCatalog.names())
    ]
    certificates = [
        {"name": certificate.name, "theorem": certificate.theorem, "sequence": certificate.sequence.name}
        for certificate in (CertificateCatalog.get(name) for name in CertificateCatalog.names())
    ]
    return RunReport("list", {}, {"sequences": sequences, "certificates": certificates})
