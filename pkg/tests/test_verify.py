from ramlab.verify import SUITES, run_suite


def test_all_suites_pass_small():
    assert run_suite("closed-forms", ps=(3, 5)).passed
    assert run_suite("equivalence", ps=(5,), max_n=4).passed
    assert run_suite("dormant-sum", ps=(5, 7)).passed
    assert run_suite("parity", ps=(5,)).passed
    assert run_suite("census-vs-formula").passed
    assert run_suite("connection-props", ps=(3,), samples=30).passed


def test_suite_registry():
    assert set(SUITES) == {"closed-forms", "equivalence", "dormant-sum",
                           "parity", "census-vs-formula", "connection-props"}
    try:
        run_suite("bogus")
    except ValueError as exc:
        assert "bogus" in str(exc)
    else:
        raise AssertionError("unknown suite accepted")
