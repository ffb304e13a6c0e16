from .oracle_config import OracleConfig
from .log_config import LogConfig

__oracle_config = OracleConfig()
__log_config = LogConfig()

oracle_params = __oracle_config
log_params = __log_config

__all__ = ['oracle_params', 'log_params']
