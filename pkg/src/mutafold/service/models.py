"""Pydantic request/response models for the HTTP surface."""

from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, Field


class CreateSessionRequest(BaseModel):
    text: str = Field(description="diagram or matrix in the text format")


class MutateRequest(BaseModel):
    vertex: int = Field(ge=1, description="1-based vertex to mutate at")


class AnalyzeRequest(BaseModel):
    text: str


class StateResponse(BaseModel):
    session_id: Optional[str] = None
    history: List[int] = []
    diagram: str
    matrix: Optional[str] = None
    finite: bool
    size: Optional[int] = None
    named_type: Optional[str] = None
    s_decomposable: bool
    decomposition: Optional[str] = None
    witness: Optional[List[int]] = None
    canonical_key: str
    back_to_start: bool = False


class ErrorResponse(BaseModel):
    detail: str
