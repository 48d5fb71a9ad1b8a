import numpy as np
import pytest

import lcmjumps.special_fns as sf
import lcmjumps.vertex_sim as vs


@pytest.fixture(scope="session")
def suite():
    return sf.default_suite()


@pytest.fixture(scope="session")
def tables(suite):
    return vs.build_sim_tables(suite=suite)


@pytest.fixture(scope="session")
def cache_home(tmp_path_factory):
    # shared cache dir so CLI tests build the suite npz once
    return str(tmp_path_factory.mktemp("xdg-cache"))


@pytest.fixture()
def run_cli(cache_home, monkeypatch, capsys):
    import lcmjumps.cli as cli

    monkeypatch.setenv("XDG_CACHE_HOME", cache_home)

    def run(*argv):
        try:
            code = cli.main(list(argv))
        except SystemExit as e:
            code = e.code if e.code is not None else 0
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run
