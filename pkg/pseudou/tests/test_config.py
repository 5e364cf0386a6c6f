import pytest

from ..config import DEFAULT_CONFIG
from ..config import RunConfig
from ..config import load_config
from ..config import validate_config
from ..exceptions import DomainError
from ..exceptions import InputError


class TestConfig:
    @pytest.mark.timeout(30)
    def test_defaults(self):
        config = load_config(environ={})
        assert config == DEFAULT_CONFIG
        assert config.TOLERANCE == 1e-9
        assert config.PRECISION_BITS == 64
        assert config.OUTPUT == "json"

    @pytest.mark.timeout(30)
    def test_priority(self, tmp_path):
        path = tmp_path / "pseudou.yml"
        path.write_text("tolerance: 1.0e-6\nseed: 3\noutput: table\n")
        environ = {"PSEUDOU_SEED": "7", "PSEUDOU_PRECISION": "128"}
        config = load_config(str(path), environ=environ, OUTPUT=None, N_THREADS=4)
        assert config.TOLERANCE == 1e-6
        assert config.SEED == 7
        assert config.PRECISION_BITS == 128
        assert config.OUTPUT == "table"
        assert config.N_THREADS == 4
        assert load_config(str(path), environ=environ, SEED=11).SEED == 11

    @pytest.mark.timeout(30)
    def test_invalid_values(self, tmp_path):
        with pytest.raises(InputError):
            load_config(environ={"PSEUDOU_TOL": "small"})
        with pytest.raises(DomainError):
            load_config(environ={}, TOLERANCE=-1.0)
        with pytest.raises(DomainError):
            validate_config(RunConfig(COMMUTATOR_B=1.0))
        with pytest.raises(DomainError):
            validate_config(RunConfig(PRECISION_BITS=32))
        path = tmp_path / "bad.yml"
        path.write_text("colour: blue\n")
        with pytest.raises(InputError):
            load_config(str(path), environ={})
        path.write_text("- just\n- a list\n")
        with pytest.raises(InputError):
            load_config(str(path), environ={})
