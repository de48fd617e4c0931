import io
import json

import pytest
from pydantic import BaseModel

from service.core.errors import SpecParseError, VerificationError
from utils import ExceptionConfiguration, ExceptionHandler, Output

pytestmark = pytest.mark.unit


class Row(BaseModel):
    n: int
    value: str


class Report(BaseModel):
    label: str
    rows: list[Row]


report = Report(label="demo", rows=[Row(n=1, value="1/2"), Row(n=2, value="3")])


def test_json_output():
    stream = io.StringIO()
    Output("json", stream).emit(report, text="ignored")
    assert json.loads(stream.getvalue()) == report.model_dump()


def test_csv_output():
    stream = io.StringIO()
    Output("csv", stream).emit(report, rows=report.rows)
    assert stream.getvalue().splitlines() == ["n,value", "1,1/2", "2,3"]


def test_csv_output_of_entity():
    stream = io.StringIO()
    Output("csv", stream).emit(Row(n=3, value="x"))
    assert stream.getvalue().splitlines() == ["n,value", "3,x"]


def test_text_output_lines():
    stream = io.StringIO()
    Output("text", stream).emit(report, text=["first [x1,x2]", "second"])
    assert stream.getvalue().splitlines() == ["first [x1,x2]", "second"]


def test_text_output_table():
    stream = io.StringIO()
    Output("text", stream).emit(Row(n=5, value="7"))
    assert "value" in stream.getvalue()
    assert "7" in stream.getvalue()


handler = ExceptionHandler(
    [
        ExceptionConfiguration(SpecParseError, 2, "SPEC_PARSE"),
        ExceptionConfiguration(VerificationError, 1, "VERIFICATION_FAILED"),
    ]
)


@pytest.mark.asyncio
async def test_dispatch_returns_command_code():
    async def command():
        return 0

    assert await handler.dispatch(command, Output("text", io.StringIO())) == 0


@pytest.mark.asyncio
async def test_dispatch_maps_errors_to_json():
    async def command():
        raise SpecParseError("unknown slot 'F2'")

    stream = io.StringIO()
    assert await handler.dispatch(command, Output("json", stream)) == 2
    assert json.loads(stream.getvalue())["code"] == "SPEC_PARSE"


@pytest.mark.asyncio
async def test_dispatch_keeps_unmapped_errors():
    async def command():
        raise RuntimeError("boom")

    with pytest.raises(RuntimeError):
        await handler.dispatch(command, Output("text", io.StringIO()))


def test_configuration_lookup():
    assert handler.configuration(VerificationError("x")).exit_code == 1
