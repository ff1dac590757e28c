"""Pydantic models for anyon-compiler runs and results."""

from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Any, ClassVar

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from anyon_compiler.anyons import Braidword, Encoding
from anyon_compiler.metrics import LeakageReport


class Engine(str, Enum):
    """Compilation engines."""
    EXHAUSTIVE = "exhaustive"
    GA = "ga"
    SK = "sk"


class TargetName(str, Enum):
    """Compilation targets."""
    H = "H"
    T = "T"
    CUSTOM = "custom"
    CNOT = "CNOT"
    SWAP = "SWAP"

    @property
    def encoding(self) -> Encoding | None:
        if self in (TargetName.H, TargetName.T):
            return Encoding.ONE_QUBIT
        if self in (TargetName.CNOT, TargetName.SWAP):
            return Encoding.TWO_QUBIT
        return None


class SearchConfig(BaseModel):
    """Genetic-algorithm and Solovay-Kitaev hyperparameters."""

    population_size: int = Field(default=1000, ge=1)
    mutation_prob: float = Field(default=0.03, ge=0.0, le=1.0)
    crossovers_per_generation: int = Field(default=500, ge=1)
    survivors: int = Field(default=200, ge=1)
    generations: int = Field(default=200, ge=1)
    base_length: int = Field(default=30, ge=1)
    rng_seed: int = Field(default=0, ge=0, lt=2**64)
    stop_distance: float = Field(default=0.0, ge=0.0)
    max_retries: int = Field(default=3, ge=0)
    tournament_size: int = Field(default=3, ge=1)
    immigrant_fraction: float = Field(default=0.1, ge=0.0, le=1.0)
    polish_rounds: int = Field(default=8, ge=0)

    @model_validator(mode="after")
    def _survivors_fit(self) -> SearchConfig:
        if self.survivors > self.population_size:
            raise ValueError(
                f"survivors ({self.survivors}) exceed population_size ({self.population_size})"
            )
        return self


class CompilationResult(BaseModel):
    """Outcome of one compilation run."""

    model_config = ConfigDict(arbitrary_types_allowed=True, use_enum_values=True)

    word: Braidword
    distance: float = Field(ge=0.0)
    leakage: LeakageReport | None = None
    engine: Engine
    sk_level: int | None = Field(default=None, ge=0)
    wall_time: float = Field(default=0.0, ge=0.0, description="seconds")
    evaluations: int = Field(default=0, ge=0)

    @field_serializer("word")
    def _word_text(self, word: Braidword) -> str:
        return word.text

    @property
    def length(self) -> int:
        return len(self.word)

    def to_record(self, include_timing: bool = False, **context: Any) -> dict[str, Any]:
        """JSON-ready record; timing is opt-in so repeated runs compare byte-for-byte."""
        record: dict[str, Any] = {**context, "word": self.word.text, "length": self.length}
        record.update(self.model_dump(exclude={"word", "wall_time"}))
        if include_timing:
            record["wall_ms"] = round(self.wall_time * 1000.0, 3)
        return record


class RunConfig(BaseModel):
    """Everything one compile invocation needs."""

    level: int = Field(ge=3)
    encoding: Encoding
    target: TargetName
    engine: Engine
    length: int | None = Field(default=None, ge=1)
    sk_level: int | None = Field(default=None, ge=0)
    include_inverses: bool = False
    anyon: int = Field(default=1, ge=1)
    leakage_weight: float = Field(default=0.0, ge=0.0)
    custom_target_path: Path | None = None
    search: SearchConfig = Field(default_factory=SearchConfig)

    @model_validator(mode="after")
    def _check_compatibility(self) -> RunConfig:
        required = self.target.encoding
        if required is not None and required is not self.encoding:
            raise ValueError(f"target {self.target.value} needs the {required.value} encoding")
        if self.target is TargetName.CUSTOM and self.custom_target_path is None:
            raise ValueError("custom target needs custom_target_path")
        if self.engine is Engine.SK:
            if self.encoding is not Encoding.ONE_QUBIT:
                raise ValueError("Solovay-Kitaev runs on the one-qubit encoding only")
            if self.sk_level is None:
                raise ValueError("engine sk needs sk_level")
        elif self.length is None:
            raise ValueError(f"engine {self.engine.value} needs length")
        return self


class SweepSpec(BaseModel):
    """A grid of compile runs: levels × (lengths or SK levels) × seeds."""

    levels: list[int] = Field(min_length=1)
    encoding: Encoding
    target: TargetName
    lengths: list[int] = Field(default_factory=list)
    sk_levels: list[int] = Field(default_factory=list)
    seeds: list[int] = Field(default_factory=lambda: [0])
    include_inverses: bool = False
    threshold_no_inverses: int = Field(default=13, ge=0)
    threshold_with_inverses: int = Field(default=7, ge=0)
    engine: Engine | None = None
    leakage_weight: float = Field(default=0.0, ge=0.0)
    search: SearchConfig = Field(default_factory=SearchConfig)

    @model_validator(mode="after")
    def _check_points(self) -> SweepSpec:
        if bool(self.lengths) == bool(self.sk_levels):
            raise ValueError("give exactly one of lengths or sk_levels")
        if any(k < 3 for k in self.levels):
            raise ValueError("levels must be >= 3")
        if self.target.encoding is not None and self.target.encoding is not self.encoding:
            raise ValueError(f"target {self.target.value} needs the {self.target.encoding.value} encoding")
        if self.target is TargetName.CUSTOM:
            raise ValueError("sweeps take named targets only")
        return self

    @property
    def threshold(self) -> int:
        return self.threshold_with_inverses if self.include_inverses else self.threshold_no_inverses

    def engine_for(self, length: int) -> Engine:
        """Exhaustive up to the threshold length, GA beyond it."""
        if self.engine is not None:
            return self.engine
        return Engine.EXHAUSTIVE if length <= self.threshold else Engine.GA

    def run_configs(self) -> list[RunConfig]:
        """One RunConfig per (level, point, seed) in deterministic row order."""
        configs = []
        for level in self.levels:
            if self.sk_levels:
                points = [(Engine.SK, None, n) for n in self.sk_levels]
            else:
                points = [(self.engine_for(length), length, None) for length in self.lengths]
            for engine, length, sk_level in points:
                for seed in self.seeds:
                    configs.append(
                        RunConfig(
                            level=level,
                            encoding=self.encoding,
                            target=self.target,
                            engine=engine,
                            length=length,
                            sk_level=sk_level,
                            include_inverses=self.include_inverses or engine is Engine.SK,
                            leakage_weight=self.leakage_weight,
                            search=self.search.model_copy(update={"rng_seed": seed}),
                        )
                    )
        return configs


class SweepRow(BaseModel):
    """One CSV row of a sweep."""

    model_config = ConfigDict(protected_namespaces=())

    model_k: int
    encoding: str
    engine: str
    length: int
    seed: int
    distance: float | None = None
    m11: float | None = None
    dU: float | None = None  # noqa: N815
    wall_ms: float = 0.0
    error: str | None = None  # logged and kept on the row, never written to the CSV

    CSV_HEADER: ClassVar[tuple[str, ...]] = (
        "model_k", "encoding", "engine", "length", "seed", "distance", "m11", "dU", "wall_ms"
    )
