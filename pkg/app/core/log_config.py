"Contains configurations related to logging."

import os
from dotenv import load_dotenv


load_dotenv()

class LogConfig:
    def __init__(self):
        self.level = os.getenv('CAPAX_LOG_LEVEL', 'WARNING').upper()
        self.log_file = os.getenv('CAPAX_LOG_FILE') or None
