"""JSON envelope every CLI command prints with --json."""
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, model_validator


class ErrorInfo(BaseModel):
    code: str
    message: str
    offset: Optional[int] = None


class OutputEnvelope(BaseModel):
    command: str
    input: str
    status: Literal['ok', 'error']
    result: Optional[Dict[str, Any]] = None
    error: Optional[ErrorInfo] = None

    @model_validator(mode='after')
    def _one_of_result_or_error(self):
        if (self.result is None) == (self.error is None):
            raise ValueError('exactly one of result and error must be set')
        if (self.status == 'ok') != (self.result is not None):
            raise ValueError('status must be ok exactly when a result is set')
        return self
