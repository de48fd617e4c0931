import csv
import logging
import sys
from collections.abc import Sequence
from typing import Literal, TextIO, TypeAlias

from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

logger = logging.getLogger("utils.output")

OutputFormat: TypeAlias = Literal["text", "json", "csv"]


class Output:
    """
    Writes entities to standard output as text, JSON or CSV.

    Args:
        fmt (OutputFormat): Selected format.
        stream (TextIO | None): Target stream, standard output by default.
    """

    def __init__(self, fmt: OutputFormat = "text", stream: TextIO | None = None):
        self.fmt = fmt
        self.stream = stream if stream is not None else sys.stdout
        self.console = Console(file=self.stream, markup=False, highlight=False, soft_wrap=True)

    def emit(self, entity: BaseModel, *, text: str | Sequence[str] | None = None, rows: Sequence[BaseModel] | None = None) -> None:
        """
        Args:
            entity (BaseModel): What ``--json`` dumps.
            text (str | Sequence[str] | None): Lines for the text format; a field table otherwise.
            rows (Sequence[BaseModel] | None): Records for ``--csv``; the entity itself otherwise.
        """
        if self.fmt == "json":
            self.console.print(entity.model_dump_json(indent=2))
        elif self.fmt == "csv":
            self.write_csv(rows if rows is not None else [entity])
        elif text is not None:
            for line in [text] if isinstance(text, str) else text:
                self.console.print(line)
        else:
            self.console.print(self.table(entity))

    def table(self, entity: BaseModel) -> Table:
        table = Table(show_header=False, box=None)
        for name, value in entity.model_dump().items():
            table.add_row(name, str(value))
        return table

    def write_csv(self, rows: Sequence[BaseModel]) -> None:
        if not rows:
            return
        records = [row.model_dump(mode="json") for row in rows]
        writer = csv.DictWriter(self.stream, fieldnames=list(records[0]), lineterminator="\n")
        writer.writeheader()
        for record in records:
            writer.writerow({key: value if not isinstance(value, list | dict) else str(value) for key, value in record.items()})
