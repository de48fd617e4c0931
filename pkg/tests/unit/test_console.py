import json

import pytest
from asyncclick.testing import CliRunner

from console import console

pytestmark = pytest.mark.unit


async def invoke(*args):
    return await CliRunner().invoke(console, list(args))


@pytest.mark.asyncio
async def test_min_index_text():
    result = await invoke("min-index", "--algebra", "E2*E2")
    assert result.exit_code == 0
    assert result.stdout.strip() == "4"


@pytest.mark.asyncio
async def test_min_index_json():
    result = await invoke("min-index", "--algebra", "E*E2", "--json")
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"algebra": "E*E2", "index": 5, "cap": 5, "odd": True}


@pytest.mark.asyncio
async def test_bad_spec_exits_with_two():
    result = await invoke("min-index", "--algebra", "F2", "--json")
    assert result.exit_code == 2
    assert json.loads(result.stdout)["code"] == "SPEC_PARSE"


@pytest.mark.asyncio
async def test_missing_cap_exits_with_two():
    result = await invoke("min-index", "--algebra", "E*E")
    assert result.exit_code == 2


@pytest.mark.asyncio
async def test_cap_exceeded_exits_with_one():
    result = await invoke("min-index", "--algebra", "E2*E2", "--cap", "3")
    assert result.exit_code == 1


@pytest.mark.asyncio
async def test_json_and_csv_conflict():
    result = await invoke("min-index", "--algebra", "E2", "--json", "--csv")
    assert result.exit_code == 2


@pytest.mark.asyncio
async def test_check_identity():
    result = await invoke("check-identity", "--algebra", "E", "--poly", "[x1,x2,x3]")
    assert result.exit_code == 0
    assert "[x1,x2,x3] on E: IDENTITY" in result.stdout


@pytest.mark.asyncio
async def test_check_identity_witness():
    result = await invoke("check-identity", "--algebra", "E", "--poly", "[x1,x2]", "--json")
    assert result.exit_code == 0
    verdict = json.loads(result.stdout)
    assert not verdict["is_identity"]
    assert verdict["witness"]["pattern"] == [["Odd"], ["Odd"]]


@pytest.mark.asyncio
async def test_check_identity_parse_error():
    result = await invoke("check-identity", "--algebra", "E", "--poly", "[x1,x2")
    assert result.exit_code == 2


@pytest.mark.asyncio
async def test_witness():
    result = await invoke("witness", "--recipe", "lie-equal", "--k", "1")
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "lie-equal on E2*E2"


@pytest.mark.asyncio
async def test_gamma_dim_of_nilpotent_quotient():
    result = await invoke("gamma-dim", "--n", "3", "--p", "2")
    assert result.stdout.strip() == "c_3(N_2) = 4, gamma_3(N_2) = 0"


@pytest.mark.asyncio
async def test_gamma_dim_of_algebra():
    result = await invoke("gamma-dim", "--n", "4", "--algebra", "E2*E2")
    assert result.stdout.strip() == "gamma_4(E2*E2) = 3"


@pytest.mark.asyncio
async def test_gamma_dim_needs_one_target():
    result = await invoke("gamma-dim", "--n", "4")
    assert result.exit_code == 2


@pytest.mark.asyncio
async def test_codim_csv():
    result = await invoke("codim", "--l", "1", "--n-max", "5", "--csv")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "n,lower_bound,closed_form"
    assert lines[-1] == "5,91,91"


@pytest.mark.asyncio
async def test_codim_needs_one_family():
    result = await invoke("codim", "--k", "2", "--l", "1")
    assert result.exit_code == 2


@pytest.mark.asyncio
async def test_decompose():
    result = await invoke("decompose", "--n", "4", "--p", "2")
    assert result.exit_code == 0
    assert "1 x M(1,1,1,1) (dim 1)" in result.stdout


@pytest.mark.asyncio
async def test_did():
    result = await invoke("did", "--n", "4", "--l", "1")
    assert result.stdout.splitlines()[0] == "Gamma_4(E*E2): dimension 9"


@pytest.mark.asyncio
async def test_bounds():
    result = await invoke("bounds", "--k", "3")
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["A_3 lead: 10/3", "B_3 lead: 10/3", "r lead: 5/24"]


@pytest.mark.asyncio
async def test_inclusions():
    result = await invoke("inclusions", "--m", "3", "--n", "2", "--degree", "5")
    assert result.exit_code == 0
    assert result.stdout.strip() == "I_3·I_2 ⊂ I_4: VERIFIED"


@pytest.mark.asyncio
async def test_failed_inclusion_exits_with_one():
    result = await invoke("inclusions", "--m", "2", "--n", "2", "--degree", "4", "--target", "3")
    assert result.exit_code == 1
    assert result.stdout.strip() == "I_2·I_2 ⊂ I_3: FAILED"


@pytest.mark.asyncio
async def test_bracket_inclusion():
    result = await invoke("inclusions", "--m", "3", "--degree", "6", "--target", "4", "--bracket")
    assert result.exit_code == 0
    assert result.stdout.strip() == "[I_3, x, y] ⊂ I_4: VERIFIED"


@pytest.mark.asyncio
async def test_product_inclusion_needs_second_factor():
    result = await invoke("inclusions", "--m", "3", "--degree", "5")
    assert result.exit_code == 2


@pytest.mark.asyncio
async def test_verify_suite_filter():
    result = await invoke("verify-suite", "--only", "formula/hooks")
    assert result.exit_code == 0
    assert result.stdout.startswith("formula/hooks: VERIFIED")


@pytest.mark.asyncio
async def test_negative_seed_is_rejected():
    result = await invoke("verify-suite", "--only", "formula/hooks", "--seed", "-1")
    assert result.exit_code == 2
