"""シード付きで生成したインスタンス群に対する横断的な性質"""

import hypothesis
import hypothesis.strategies as strat
import pytest

from nuset.concrete.usecase.validation import validate
from nuset.fibred.usecase.identities import check_identities
from nuset.fibred.usecase.iso import iso_check
from nuset.fibred.usecase.to_fibred import to_fibred
from nuset.fibred.usecase.to_indexed import to_indexed
from nuset.generator.domain.generator_config import GeneratorConfig
from nuset.generator.usecase.generate_instance import generate_instance
from nuset.staged.usecase.build import build_tower

configs = strat.builds(
    lambda nu_depth_fiber, seed: GeneratorConfig(
        nu=nu_depth_fiber[0], depth=nu_depth_fiber[1], max_fiber=nu_depth_fiber[2], seed=seed,
    ),
    strat.sampled_from([(1, 3, 3), (2, 2, 3), (2, 3, 1), (2, 3, 2), (2, 3, 3)]),
    strat.integers(0, 2**64 - 1),
)

corpus = hypothesis.settings(max_examples=20, deadline=None)

# ν ∈ {1, 2}・深さ 1..3・最大ファイバー 1..3 を一通り回る固定コーパス
SEEDED_CORPUS = [
    GeneratorConfig(nu=1 + i % 2, depth=1 + (i // 2) % 3, max_fiber=1 + (i // 6) % 3, seed=1000 + i)
    for i in range(50)
]


def _config_id(config: GeneratorConfig) -> str:
    return f"nu{config.nu}-d{config.depth}-f{config.max_fiber}-s{config.seed}"


@corpus
@hypothesis.given(configs)
def test_generated_instances_validate_and_build(config):
    D = generate_instance(config)
    assert validate(D).is_valid
    bundle = build_tower(config.nu, D.levels)
    assert bundle.certificates_hold
    assert bundle.to_nuset() == D


@corpus
@hypothesis.given(configs)
def test_both_round_trips_are_isomorphisms(config):
    D = generate_instance(config)
    X = to_fibred(D)
    assert check_identities(X).holds
    assert iso_check(to_indexed(X), D)
    assert iso_check(to_fibred(to_indexed(X)), X)


@corpus
@hypothesis.given(configs)
def test_generation_is_deterministic(config):
    assert generate_instance(config) == generate_instance(config.model_copy())


@pytest.mark.parametrize("config", SEEDED_CORPUS, ids=_config_id)
def test_seeded_corpus(config):
    D = generate_instance(config)
    assert validate(D).is_valid

    bundle = build_tower(config.nu, D.levels)
    assert bundle.level == config.depth
    assert bundle.certificates_hold
    assert bundle.to_nuset() == D

    X = to_fibred(D)
    assert check_identities(X).holds
    assert iso_check(to_indexed(X), D)
    assert iso_check(to_fibred(to_indexed(X)), X)
