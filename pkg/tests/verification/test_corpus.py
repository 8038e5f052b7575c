"""Tests for the seeded random corpus."""

import numpy as np
import pytest

from cover_energy.config import Settings
from cover_energy.errors import InvalidParamsError
from cover_energy.graph import is_connected
from cover_energy.verification import draw_trial, random_connected_graph, trial_rng

SETTINGS = Settings()


def test_trial_draws_are_deterministic():
    assert draw_trial(7, 3, 12, SETTINGS) == draw_trial(7, 3, 12, SETTINGS)


def test_trial_draws_do_not_depend_on_earlier_trials():
    later = draw_trial(7, 40, 12, SETTINGS)
    for i in range(40):
        draw_trial(7, i, 12, SETTINGS)
    assert draw_trial(7, 40, 12, SETTINGS) == later


def test_seeds_and_indices_give_independent_streams():
    a = trial_rng(7, 0).random(4)
    assert not np.array_equal(a, trial_rng(7, 1).random(4))
    assert not np.array_equal(a, trial_rng(8, 0).random(4))


@pytest.mark.parametrize("index", range(30))
def test_trial_graph_is_connected_and_in_range(index):
    sample = draw_trial(11, index, 9, SETTINGS)
    assert 3 <= sample.n <= 9
    assert sample.graph.n == sample.n
    assert sample.p in SETTINGS.edge_probabilities
    assert is_connected(sample.graph)
    assert all(v < sample.n for v in sample.candidate)
    assert all(v < sample.n for v in sample.padding)


def test_trial_orders_cover_the_range():
    orders = {draw_trial(5, i, 6, SETTINGS).n for i in range(200)}
    assert orders == {3, 4, 5, 6}


def test_edge_probabilities_from_settings():
    settings = Settings(edge_probabilities=(0.8,))
    assert {draw_trial(1, i, 8, settings).p for i in range(10)} == {0.8}


def test_trial_order_bound():
    with pytest.raises(InvalidParamsError):
        draw_trial(7, 0, 2, SETTINGS)


def test_connected_sample_gives_up_after_retries():
    with pytest.raises(InvalidParamsError):
        random_connected_graph(trial_rng(0, 0), 5, 0.0, retries=3)


@pytest.mark.parametrize(("seed", "index"), [(-1, 0), (0, -2)])
def test_negative_seed_or_index_is_rejected(seed, index):
    with pytest.raises(InvalidParamsError):
        trial_rng(seed, index)
