"""Named registries of sequence and certificate documents, plus document field validation."""

from __future__ import annotations

import abc
import json
import logging
import os
import pathlib
import threading
from typing import Any
from typing import Callable

from ratiolog.shared import errors

logger = logging.getLogger(__name__)

KEY_NAME = "name"
FILE_SCHEME = "file://"


class Collection(abc.ABC):
    """Process wide registry of entries keyed by name.

    Subclasses own their state. Each one must declare its own `_collection = {}`,
    `_collection_lock = threading.RLock()` and `_collection_uri = None`, along with `collection_help` (plural noun
    used in messages) and `entry_cls` (type built by `load`). Built-in entries are registered by `post_load`, which
    runs on first access and before every load.
    """

    _collection: dict[str, CollectionEntry]
    _collection_lock: Any
    # Set by the first file load, used by save() when no destination is given.
    _collection_uri: str | None

    collection_help: str
    entry_cls: type[CollectionEntry]

    @classmethod
    def _ensure_loaded(cls) -> None:
        if not cls._collection:
            cls.post_load()

    @classmethod
    def get(cls, key: str) -> CollectionEntry:
        """Look up an entry by name.

        Raises:
            The error from missing_error() when no entry has this name.
        """
        with cls._collection_lock:
            cls._ensure_loaded()
            entry = cls._collection.get(key)
        if entry is None:
            raise cls.missing_error(key)
        return entry

    @classmethod
    def names(cls) -> list[str]:
        """Sorted names of every registered entry."""
        with cls._collection_lock:
            cls._ensure_loaded()
            return sorted(cls._collection)

    @classmethod
    def load(cls, data: str | list[dict]) -> list[tuple[int, Exception]]:
        """Register entries from documents.

        Args:
            data: JSON array text, a path to a JSON file (optionally prefixed with file://), or parsed documents.

        Returns:
            (index, error) for every document that was not registered, including names that are already taken.
            Existing entries are never replaced by a load.
        """
        documents = cls._read_documents(data) if isinstance(data, str) else data
        cls.post_load()
        failures: list[tuple[int, Exception]] = []
        for index, document in enumerate(documents or []):
            try:
                cls.validate_entry(document)
                cls.register(cls.entry_cls.from_json(document))
            except errors.DocumentValueError as error:
                logger.warning(f"Skipping {cls.collection_help} document at index {index}: {error}")
                failures.append((index, error))
            except Exception as error:  # pylint: disable=broad-except
                logger.exception(f"Skipping invalid {cls.collection_help} document at index {index}", exc_info=error)
                failures.append((index, error))
        return failures

    @classmethod
    def _read_documents(cls, data: str) -> list | None:
        text = data.strip()
        if text.startswith("["):
            try:
                return json.loads(text)
            except json.JSONDecodeError as error:
                logger.exception(f"Could not parse {cls.collection_help} JSON text", exc_info=error)
                return None
        cls._collection_uri = text
        path = pathlib.Path(text.removeprefix(FILE_SCHEME)).expanduser()
        if not path.is_file():
            logger.warning(f"No {cls.collection_help} file at {path}, nothing loaded")
            return None
        try:
            documents = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as error:
            logger.exception(f"Could not parse {cls.collection_help} file {path}", exc_info=error)
            return None
        logger.info(f"Read {len(documents)} {cls.collection_help} from {path}")
        return documents

    @classmethod
    def missing_error(cls, key: str) -> errors.VerificationError:
        """Error raised by get() and remove() for unknown names."""
        return errors.VerificationError(f"missing-{cls.collection_help.replace(' ', '-')}", {"name": key})

    @classmethod
    def post_load(cls) -> None:
        """Register built-in entries. Nothing by default."""

    @classmethod
    def register(cls, entry: CollectionEntry, replace: bool = False) -> None:
        """Add an entry under its name.

        Args:
            entry: Entry to share with every caller.
            replace: Overwrite an existing entry of the same name instead of raising.

        Raises:
            DocumentValueError if the name is taken and replace is False.
        """
        with cls._collection_lock:
            if not replace and entry.name in cls._collection:
                raise errors.DocumentValueError(
                    f"duplicate-{cls.collection_help.replace(' ', '-')}", {"name": entry.name}
                )
            cls._collection[entry.name] = entry
        logger.debug(f"Registered {cls.collection_help} {entry.name}")

    @classmethod
    def remove(cls, key: str) -> CollectionEntry:
        """Unregister an entry and return it."""
        with cls._collection_lock:
            entry = cls._collection.pop(key, None)
        if entry is None:
            raise cls.missing_error(key)
        return entry

    @classmethod
    def save(cls, uri: str | None = None) -> None:
        """Write every entry as a JSON array.

        Args:
            uri: Destination file. Defaults to the file of the last load, and does nothing when there is none.
        """
        uri = uri or cls._collection_uri
        if uri is None:
            return
        with cls._collection_lock:
            text = json.dumps(cls.to_json(), indent=2)
        atomic_write_text(pathlib.Path(uri.removeprefix(FILE_SCHEME)).expanduser(), text)
        logger.info(f"Saved {cls.collection_help} to {uri}")

    @classmethod
    def teardown(cls) -> None:
        """Forget every entry and the save location."""
        with cls._collection_lock:
            cls._collection.clear()
            cls._collection_uri = None

    @classmethod
    def to_json(cls) -> list[dict]:
        """Documents of every entry, ordered by name."""
        with cls._collection_lock:
            return [cls._collection[name].to_json() for name in sorted(cls._collection)]

    @classmethod
    def validate_entry(cls, data: Any) -> None:
        """Reject documents that are not objects, or whose name is already registered.

        Raises:
            DocumentValueError describing the rejection.
        """
        if not isinstance(data, dict):
            raise errors.DocumentValueError("invalid-type", {"expected": "object", "value": str(data)})
        name = data.get(KEY_NAME)
        with cls._collection_lock:
            taken = name in cls._collection
        if taken:
            raise errors.DocumentValueError(f"duplicate-{cls.collection_help.replace(' ', '-')}", {"name": name})


class CollectionEntry(abc.ABC):
    """Entry that can be stored in a Collection."""

    name: str

    @classmethod
    @abc.abstractmethod
    def from_json(cls, data: dict) -> CollectionEntry:
        """Build an entry from its document."""

    @abc.abstractmethod
    def to_json(self) -> dict:
        """Document form of the entry."""


def atomic_write_text(path: pathlib.Path, text: str) -> None:
    """Replace a file in one step, creating parent directories as needed.

    Readers see either the previous content or the new one, never a partial write.
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    staging = path.with_name(f"{path.name}.{os.getpid()}.{threading.get_ident()}.tmp")
    staging.write_text(text, encoding="utf-8")
    os.replace(staging, path)


def _invalid(slug: str, key: str, value: Any, **details: Any) -> errors.DocumentValueError:
    return errors.DocumentValueError(slug, data={"key": key, "value": value, **details})


def get_and_validate(  # Every document field goes through one checker. pylint: disable=too-many-arguments
    data: dict,
    key: str,
    expected_type: type | tuple[type, ...] | None = None,
    expected_choices: list | tuple | None = None,
    nullable: bool = True,
    default: Any = None,
    validator: Callable[[Any], bool] | None = None,
    validation_error: str = "invalid-value",
    validation_message: str = "Invalid value",
) -> Any:
    """Read one field of a document and check it.

    Args:
        data: Document mapping.
        key: Field name.
        expected_type: Required type or types. Booleans never count as int.
        expected_choices: Allowed values.
        nullable: Whether a missing or null value is acceptable.
        default: Value used when the field is absent.
        validator: Extra predicate the value must satisfy.
        validation_error: Slug reported when the validator rejects the value.
        validation_message: Message reported when the validator rejects the value.

    Returns:
        The field value, or the default.

    Raises:
        DocumentValueError naming the field when a check fails.
    """
    value = data.get(key, default)
    if value is None:
        if nullable:
            return None
        raise errors.DocumentValueError("not-nullable", data={"key": key})
    if expected_type is not None:
        wrong_type = not isinstance(value, expected_type)
        if wrong_type or (expected_type is int and isinstance(value, bool)):
            raise _invalid("invalid-type", key, value, options=str(expected_type))
    if expected_choices is not None and value not in expected_choices:
        raise _invalid("invalid-choice", key, value, options=list(expected_choices))
    if validator is not None and not validator(value):
        raise _invalid(validation_error, key, value, msg=validation_message)
    return value
