"""Utilities to help perform runtime imports."""

import importlib
import pathlib


def import_modules(module_folder: str | pathlib.Path, package: str, recursive: bool = True) -> list[str]:
    """Import all modules in a directory so their registration side effects run.

    Args:
        module_folder: A directory containing one or more python modules.
        package: The package root of all the modules.
        recursive: Whether to search sub packages for modules as well.

    Returns:
        Names of the imported modules, sorted within each directory so registration order is stable.
    """
    folder = pathlib.Path(module_folder)
    imported = []
    for path in sorted(folder.glob("*.py")):
        if path.name.startswith("__"):
            continue
        module_name = f"{package}.{path.stem}"
        importlib.import_module(module_name)
        imported.append(module_name)
    if recursive and folder.is_dir():
        for sub_dir in sorted(item for item in folder.iterdir() if item.is_dir()):
            if sub_dir.name.startswith(("_", "test")) or "." in sub_dir.name:
                # Tests, private packages and dotted names are not importable command packages.
                continue
            imported.extend(import_modules(sub_dir, f"{package}.{sub_dir.name}", recursive=True))
    return imported
