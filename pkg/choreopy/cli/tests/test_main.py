import pathlib
import threading

import pytest

from choreopy.checker.soundness import check_soundness_completeness
from choreopy.choreo.choreography import locations
from choreopy.choreo.epp import project_all
from choreopy.cli.main import corpus, load_program, main, resolve
from choreopy.runtime.memory import run_in_memory
from choreopy.runtime.tests.test_tcp import free_ports

GOLDENS = pathlib.Path(__file__).parent / "goldens"

CHOREOGRAPHIES = ["pipeline.chor", "ring.chor", "selfcomm.chor", "wide.chor"]


@pytest.mark.parametrize("role", ["Alice", "Bob", "Carol"])
def test_project(role, capsys):

    assert main(["project", "pipeline.chor", "--role", role]) == 0
    golden = (GOLDENS / f"pipeline_{role}.txt").read_text(encoding="utf-8")
    assert capsys.readouterr().out == golden


def test_project_unmentioned_role(capsys):

    with pytest.warns(UserWarning, match="Dave"):
        assert main(["project", "pipeline.chor", "--role", "Dave"]) == 0
    assert capsys.readouterr().out == ""


def test_static_errors(tmp_path, capsys):

    malformed = tmp_path / "malformed.chor"
    malformed.write_text("x <- Alice => <> 1\n", encoding="utf-8")
    assert main(["check", str(malformed)]) == 2
    assert "1:" in capsys.readouterr().err

    # x lives at Bob, so Alice cannot use it
    misowned = tmp_path / "misowned.chor"
    misowned.write_text("x <- Alice => Bob <> 1\nAlice |> (show x)\n",
                        encoding="utf-8")
    assert main(["run", str(misowned)]) == 2

    assert main(["check", str(tmp_path / "missing.chor")]) == 2


def test_check(capsys):

    assert main(["check", "pipeline.chor"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "verdict: true"

    assert main(["check", "--raw-network", "deadlock.net"]) == 1
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "verdict: false"
    assert "witness:" in out

    assert main(["check", "pipeline.chor", "--max-states", "1"]) == 2
    assert capsys.readouterr().out.startswith("verdict: inconclusive")


def test_run(capsys):

    assert main(["run", "pipeline.chor"]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "Alice: [83]", "Bob: []", "Carol: []"]

    assert main(["run", "selfcomm.chor", "--mode", "memory"]) == 0
    assert "Bob: [26]" in capsys.readouterr().out


def test_usage_errors():

    for argv in (["run", "pipeline.chor", "--mode", "tcp"],
                 ["run", "pipeline.chor", "--mode", "tcp", "--role", "Bob"],
                 ["run", "pipeline.chor", "--mode", "udp"],
                 ["project", "pipeline.chor"],
                 ["frobnicate"],
                 []):
        with pytest.raises(SystemExit) as err:
            main(argv)
        assert err.value.code == 64


def test_list_examples(capsys):

    assert main(["list-examples"]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "deadlock.net", "pipeline.chor", "ring.chor", "selfcomm.chor",
        "wide.chor"]

    assert resolve("ring.chor").name == "ring.chor"
    assert (corpus() / "pipeline.hosts").is_file()


@pytest.mark.parametrize("name", CHOREOGRAPHIES)
def test_runtime_agrees_with_checker(name):

    program = load_program(name)
    c = program.to_choreo()

    verdict = check_soundness_completeness(c, program.registry)
    assert verdict.holds

    observations = run_in_memory(project_all(c, locations(c)),
                                 program.registry)
    outcome, = verdict.report.outcomes
    assert {loc: tuple(vs) for loc, vs in observations.items()} == outcome


def test_run_over_tcp(tmp_path, capsys):

    roles = ["Alice", "Bob", "Carol"]
    hosts = tmp_path / "pipeline.hosts"
    hosts.write_text("# location  host  port\n" + "".join(
        f"{role} 127.0.0.1 {port}\n"
        for role, port in zip(roles, free_ports(len(roles)))),
        encoding="utf-8")

    codes = {}

    def run(role):
        codes[role] = main(["run", "pipeline.chor", "--mode", "tcp",
                            "--role", role, "--config", str(hosts),
                            "--timeout", "10"])

    threads = [threading.Thread(target=run, args=(role,)) for role in roles]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join(30)

    assert codes == {role: 0 for role in roles}
    out = capsys.readouterr().out
    for line in ("Alice: [83]", "Bob: []", "Carol: []"):
        assert line in out

    # A role the deployment does not list
    assert main(["run", "pipeline.chor", "--mode", "tcp", "--role", "Dave",
                 "--config", str(hosts)]) == 2
