"""Command verifying ratio log-convexity certificates."""

import argparse
import json
import pathlib

from ratiolog.commands import argument
from ratiolog.commands import command
from ratiolog.commands import worst_code
from ratiolog.common.certify import Certificate
from ratiolog.common.certify import CertificateCatalog
from ratiolog.common.certify import verify_certificate
from ratiolog.common.reports import RunReport
from ratiolog.shared import errors


def _load_certificates(path: str) -> list[Certificate]:
    """Certificates from a document holding one certificate object or a list of them."""
    file_path = pathlib.Path(path).expanduser()
    try:
        data = json.loads(file_path.read_text(encoding="utf-8"))
    except FileNotFoundError as error:
        raise errors.UsageError(f"Certificate file not found {file_path}") from error
    except json.JSONDecodeError as error:
        raise errors.DocumentValueError("invalid-json", {"path": str(file_path), "detail": str(error)}) from error
    documents = data if isinstance(data, list) else [data]
    if not documents or not all(isinstance(document, dict) for document in documents):
        raise errors.DocumentValueError("invalid-type", {"path": str(file_path), "expected": "object"})
    return [Certificate.from_json(document) for document in documents]


@command(
    "certify",
    "Verify certificate hypotheses symbolically and the base window exactly.",
    argument("name", nargs="?", help="Name of a built-in certificate, used with --builtin."),
    argument("--builtin", action="store_true", help="Verify the built-in certificate with the given name."),
    argument("--file", help="Path to a certificate document, holding one certificate or a list."),
)
def certify(args: argparse.Namespace) -> RunReport:
    """Verify one or more certificates; the exit code is the worst verdict."""
    if args.file and (args.builtin or args.name):
        raise errors.UsageError("Give either --file or a built-in certificate name")
    if args.file:
        certificates = _load_certificates(args.file)
    elif args.builtin and args.name:
        certificates = [CertificateCatalog.get(args.name)]  # type: ignore[list-item]
    else:
        raise errors.UsageError("Give --file PATH or NAME --builtin")
    reports = [verify_certificate(certificate) for certificate in certificates]
    code = worst_code(report.code for report in reports)
    inputs = {"file": args.file, "certificates": [certificate.name for certificate in certificates]}
    outcome = reports[0] if len(reports) == 1 else {"reports": reports}
    elapsed = sum(report.elapsed_ms for report in reports)
    return RunReport("certify", inputs, outcome, code, elapsed)
