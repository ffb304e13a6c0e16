"Contains configurations for the brute-force summand oracle."

import os
from dotenv import load_dotenv


load_dotenv()

class OracleConfig:
    def __init__(self):
        self.oracle_cap = int(os.getenv('CAPAX_ORACLE_CAP', '64'))
        self.sweep_limit = int(os.getenv('CAPAX_SWEEP_LIMIT', '4096'))
        self.factor_cap = 2 ** 64
