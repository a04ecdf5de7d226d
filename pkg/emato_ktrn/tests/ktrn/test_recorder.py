import numpy as np
import pytest

from ...data_classes import GenerationGraph, TransferEvent
from ...ktrn import KtrnRecorder, RecorderError, aggregate_graphs, load_ktrn, save_ktrn


def test_recording_builds_one_graph_per_generation():
    recorder = KtrnRecorder(4)
    recorder.transfer(0, 1, 2)
    recorder.transfer(0, 1, 2)
    recorder.transfer(0, 3, 0, count=2)
    first = recorder.finalize(0)
    second = recorder.finalize(1)

    assert first.generation == 0
    assert first.adjacency[1, 2] == 2 and first.adjacency[3, 0] == 2
    assert first.transfer_count == 4
    assert first.edge_count == 2
    assert first.simple_view.sum() == 2
    assert second.transfer_count == 0
    assert recorder.last_finalized == 1
    assert [str(e) for e in recorder.events_of(0)] == ['g0: 1->2 x1', 'g0: 1->2 x1', 'g0: 3->0 x2']


@pytest.mark.parametrize('event', [
    TransferEvent(generation=0, source=1, target=1),
    TransferEvent(generation=0, source=0, target=4),
    TransferEvent(generation=0, source=-1, target=2),
    TransferEvent(generation=0, source=0, target=1, count=0),
    TransferEvent(generation=1, source=0, target=1),
])
def test_invalid_events(event: TransferEvent):
    recorder = KtrnRecorder(4)
    with pytest.raises(RecorderError):
        recorder.record(event)
    assert recorder.event_log == []


def test_events_of_finalized_generation_are_rejected():
    recorder = KtrnRecorder(3)
    recorder.finalize(0)
    with pytest.raises(RecorderError):
        recorder.transfer(0, 0, 1)
    with pytest.raises(RecorderError):
        recorder.finalize(0)
    with pytest.raises(RecorderError):
        recorder.finalize(2)
    with pytest.raises(RecorderError):
        KtrnRecorder(0)


def test_graph_is_read_only():
    recorder = KtrnRecorder(3)
    recorder.transfer(0, 0, 1)
    graph = recorder.finalize(0)
    with pytest.raises(ValueError):
        graph.adjacency[0, 2] = 1
    assert recorder.finalize(1).adjacency.sum() == 0


def test_aggregate_graphs():
    graphs = [GenerationGraph(generation=g, n=3, adjacency=np.array([[0, g, 0], [1, 0, 0], [0, 0, 0]]))
              for g in range(3)]
    total = aggregate_graphs(graphs)
    assert total.generation == -1
    assert total.adjacency.tolist() == [[0, 3, 0], [3, 0, 0], [0, 0, 0]]
    with pytest.raises(RecorderError):
        aggregate_graphs([])
    with pytest.raises(RecorderError):
        aggregate_graphs([GenerationGraph.empty(0, 3), GenerationGraph.empty(1, 4)])


def test_ktrn_file(tmp_path):
    recorder = KtrnRecorder(5)
    recorder.transfer(0, 4, 0, count=3)
    recorder.finalize(0)
    recorder.transfer(1, 2, 3)
    recorder.finalize(1)
    file_path = str(tmp_path / 'run' / 'ktrn.jsonl')
    save_ktrn(recorder.graphs, file_path)

    with open(file_path) as f:
        assert f.readline() == '{"generation": 0, "n": 5, "edges": [[4, 0, 3]]}\n'
    loaded = load_ktrn(file_path)
    assert [g.generation for g in loaded] == [0, 1]
    for original, restored in zip(recorder.graphs, loaded):
        assert np.array_equal(original.adjacency, restored.adjacency)


def test_broken_ktrn_file(tmp_path):
    with pytest.raises(RecorderError):
        load_ktrn(str(tmp_path / 'missing.jsonl'))
    broken = tmp_path / 'broken.jsonl'
    broken.write_text('{"generation": 0, "n": 2, "edges": []}\n{"generation": 1, "n": 2, "edges": [[0, 0, 1]]}\n')
    with pytest.raises(RecorderError):
        load_ktrn(str(broken))
