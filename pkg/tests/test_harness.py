# Copyright (c) 2026 The social_mae developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.


#
# Imports
#
import csv
import json
import math
import os
from typing import Any, Dict, List

import pytest
import torch

from social_mae.config.config_file_sections_loader import ConfigFileSectionsLoader
from social_mae.experiment.experiment_config import ExperimentConfig
from social_mae.experiment.experiment_config_types import ExperimentConfigTypes
from social_mae.harness.main import main
from social_mae.training.checkpoint import Checkpoint
from social_mae.training.metrics_csv_log import MetricsCsvLog


#
# Functions
#

# Read a JSON file
def read_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fin:
        return json.load(fin)


# Read the rows of a CSV file
def read_csv(path: str) -> List[Dict[str, str]]:
    with open(path, "r", encoding="utf-8", newline="") as fin:
        return list(csv.DictReader(fin))


# Run the synthesis and pre-training commands
def synth_and_pretrain(config_path: str, out: str) -> None:
    assert main(["synth", "-c", config_path, "--out", out]) == 0
    assert main(["pretrain", "-c", config_path, "--out", out]) == 0


#
# Tests
#

def test_synth_writes_dataset_and_manifest(write_config: Any,
                                           tmp_path: Any) -> None:
    out = str(tmp_path / "run")

    assert main(["synth", "-c", write_config(), "--out", out]) == 0

    data_dir = os.path.join(out, "data", "train")
    assert sorted(os.listdir(data_dir)) == ["manifest.json"] + [f"scene_{i:05d}.json" for i in range(4)]
    manifest = read_json(os.path.join(data_dir, "manifest.json"))
    assert manifest["num_scenes"] == 4
    assert manifest["seed"] == 0
    assert manifest["generator"]["num_frames"] == 10
    assert set(manifest["files"]) == {f"scene_{i:05d}.json" for i in range(4)}


def test_synth_is_reproducible(write_config: Any,
                               tmp_path: Any) -> None:
    config_path = write_config()
    manifests = []
    for name in ("a", "b"):
        out = str(tmp_path / name)
        assert main(["synth", "-c", config_path, "--out", out]) == 0
        manifests.append(read_json(os.path.join(out, "data", "train", "manifest.json")))

    assert manifests[0] == manifests[1]

    assert main(["synth", "-c", config_path, "--out", str(tmp_path / "c"), "--seed", "3"]) == 0
    other = read_json(os.path.join(str(tmp_path / "c"), "data", "train", "manifest.json"))
    assert other["seed"] == 3
    assert other["files"] != manifests[0]["files"]


def test_synth_verify(write_config: Any,
                      tmp_path: Any) -> None:
    config_path = write_config()
    out = str(tmp_path / "run")
    assert main(["synth", "-c", config_path, "--out", out]) == 0

    assert main(["synth", "-c", config_path, "--out", out, "--verify"]) == 0

    scene_path = os.path.join(out, "data", "train", "scene_00002.json")
    with open(scene_path, "r", encoding="utf-8") as fin:
        doc = json.load(fin)
    doc["fps"] = doc["fps"] + 1.0
    with open(scene_path, "w", encoding="utf-8") as fout:
        json.dump(doc, fout)
    assert main(["synth", "-c", config_path, "--out", out, "--verify"]) != 0


def test_synth_verify_missing_file(write_config: Any,
                                   tmp_path: Any) -> None:
    config_path = write_config()
    out = str(tmp_path / "run")
    assert main(["synth", "-c", config_path, "--out", out]) == 0

    os.remove(os.path.join(out, "data", "train", "scene_00001.json"))

    assert main(["synth", "-c", config_path, "--out", out, "--verify"]) != 0


def test_pretrain_command(write_config: Any,
                          tmp_path: Any) -> None:
    out = str(tmp_path / "run")

    synth_and_pretrain(write_config(), out)

    rows = MetricsCsvLog.Read(os.path.join(out, "pretrain_metrics.csv"))
    assert [r["epoch"] for r in rows] == ["1", "2", "3", "4", "5"]
    assert all(math.isfinite(r["value"]) for r in rows)
    assert os.path.exists(os.path.join(out, "checkpoints", "pretrain_last.pt"))
    assert os.path.exists(os.path.join(out, "plots", "pretrain_loss.png"))


def test_pretrain_data_fraction(write_config: Any,
                                tmp_path: Any) -> None:
    out = str(tmp_path / "run")
    config_path = write_config(data_fraction=0.5, pretrain_epochs=1)
    assert main(["synth", "-c", config_path, "--out", out]) == 0

    assert main(["pretrain", "-c", config_path, "--out", out]) == 0

    # 2 scenes with batch size 2: one step per epoch
    rows = MetricsCsvLog.Read(os.path.join(out, "pretrain_metrics.csv"))
    assert rows[-1]["step"] == "1"


@pytest.mark.parametrize("fraction,steps", [
    (0.25, "1"),
    (0.5, "2"),
    (1.0, "4"),
])
def test_finetune_fraction(write_config: Any,
                           tmp_path: Any,
                           fraction: float,
                           steps: str) -> None:
    out = str(tmp_path / "run")
    config_path = write_config(finetune_fraction=fraction, batch_size=1, pretrain_epochs=1, finetune_epochs=1)
    synth_and_pretrain(config_path, out)

    assert main(["finetune", "-c", config_path, "--out", out]) == 0

    # Batch size 1: one step per scene, pre-training still sees the whole corpus
    assert MetricsCsvLog.Read(os.path.join(out, "pretrain_metrics.csv"))[-1]["step"] == "4"
    assert MetricsCsvLog.Read(os.path.join(out, "group_metrics.csv"))[-1]["step"] == steps


def test_run_config_keeps_overrides(write_config: Any,
                                    tmp_path: Any) -> None:
    out = str(tmp_path / "run")
    config_path = write_config(pretrain_epochs=1)
    assert main(["synth", "-c", config_path, "--out", out, "--seed", "7"]) == 0
    assert main(["pretrain", "-c", config_path, "--out", out, "--seed", "7"]) == 0

    ckpt_dir = os.path.join(out, "checkpoints")
    with open(config_path, "r", encoding="utf-8") as fin, \
            open(os.path.join(ckpt_dir, "config.ini"), "r", encoding="utf-8") as fin_copy:
        assert fin_copy.read() == fin.read()
    run_config, _ = ConfigFileSectionsLoader.Load(os.path.join(ckpt_dir, "run_config.ini"), ExperimentConfig)
    assert run_config.GetValue(ExperimentConfigTypes.SEED) == 7
    assert run_config.GetValue(ExperimentConfigTypes.OUTPUT_DIR) == os.path.abspath(out)
    assert run_config.GetValue(ExperimentConfigTypes.DATASET_DIR) == os.path.join(os.path.abspath(out), "data", "train")


def test_pretrain_resume(write_config: Any,
                         tmp_path: Any) -> None:
    config_path = write_config(dataset_dir=str(tmp_path / "data"))
    full = str(tmp_path / "full")
    synth_and_pretrain(config_path, full)
    resumed = str(tmp_path / "resumed")

    assert main(["pretrain", "-c", config_path, "--out", resumed,
                 "--resume", os.path.join(full, "checkpoints", "pretrain_epoch_0003.pt")]) == 0

    full_rows = MetricsCsvLog.Read(os.path.join(full, "pretrain_metrics.csv"))
    resumed_rows = MetricsCsvLog.Read(os.path.join(resumed, "pretrain_metrics.csv"))
    assert [r["epoch"] for r in resumed_rows] == ["4", "5"]
    assert resumed_rows[-1]["value"] == pytest.approx(full_rows[-1]["value"], abs=1e-6)


def test_finetune_checkpoint_has_no_decoder(write_config: Any,
                                            tmp_path: Any) -> None:
    config_path = write_config()
    out = str(tmp_path / "run")
    synth_and_pretrain(config_path, out)

    assert main(["finetune", "-c", config_path, "--out", out]) == 0

    checkpoint = Checkpoint.Load(os.path.join(out, "checkpoints", "group_last.pt"))
    assert checkpoint.state_dict
    assert not any(k.startswith("decoder.") for k in checkpoint.state_dict)
    assert any(k.startswith("encoder.") for k in checkpoint.state_dict)
    assert len(MetricsCsvLog.Read(os.path.join(out, "group_metrics.csv"))) == 5


def test_finetune_init_differs_only_in_encoder(write_config: Any,
                                               tmp_path: Any) -> None:
    # A zero learning rate keeps the initial weights in the saved checkpoint
    config_path = write_config(dataset_dir=str(tmp_path / "data"), finetune_lr=0.0, finetune_epochs=1)
    pretrained_out = str(tmp_path / "pretrained")
    synth_and_pretrain(config_path, pretrained_out)
    scratch_out = str(tmp_path / "scratch")

    assert main(["finetune", "-c", config_path, "--out", pretrained_out]) == 0
    assert main(["finetune", "-c", config_path, "--out", scratch_out, "--from-scratch"]) == 0

    pretrain = Checkpoint.Load(os.path.join(pretrained_out, "checkpoints", "pretrain_last.pt")).state_dict
    pretrained = Checkpoint.Load(os.path.join(pretrained_out, "checkpoints", "group_last.pt")).state_dict
    scratch = Checkpoint.Load(os.path.join(scratch_out, "checkpoints", "group_last.pt")).state_dict

    assert set(pretrained) == set(scratch)
    encoder_keys = [k for k in pretrained if k.startswith("encoder.")]
    assert encoder_keys
    for key in pretrained:
        if key.startswith("encoder."):
            assert torch.equal(pretrained[key], pretrain[key])
        else:
            assert torch.equal(pretrained[key], scratch[key])
    assert any(not torch.equal(pretrained[k], scratch[k]) for k in encoder_keys)


def test_finetune_explicit_checkpoint(write_config: Any,
                                      tmp_path: Any) -> None:
    config_path = write_config(dataset_dir=str(tmp_path / "data"), finetune_lr=0.0, finetune_epochs=1)
    pretrained_out = str(tmp_path / "pretrained")
    synth_and_pretrain(config_path, pretrained_out)
    epoch2 = os.path.join(pretrained_out, "checkpoints", "pretrain_epoch_0002.pt")
    out = str(tmp_path / "other")

    assert main(["finetune", "-c", config_path, "--out", out, "--checkpoint", epoch2]) == 0

    pretrain = Checkpoint.Load(epoch2).state_dict
    tuned = Checkpoint.Load(os.path.join(out, "checkpoints", "group_last.pt")).state_dict
    for key in tuned:
        if key.startswith("encoder."):
            assert torch.equal(tuned[key], pretrain[key])


def test_finetune_argument_errors(write_config: Any,
                                  tmp_path: Any) -> None:
    config_path = write_config(dataset_dir=str(tmp_path / "data"))
    out = str(tmp_path / "run")
    assert main(["synth", "-c", config_path, "--out", out]) == 0

    # No pre-training checkpoint in the output directory
    assert main(["finetune", "-c", config_path, "--out", out]) == 1
    assert main(["finetune", "-c", config_path, "--out", out, "--from-scratch",
                 "--checkpoint", os.path.join(out, "x.pt")]) == 1


def test_finetune_encoder_mismatch(write_config: Any,
                                   tmp_path: Any) -> None:
    data = str(tmp_path / "data")
    out = str(tmp_path / "run")
    synth_and_pretrain(write_config(dataset_dir=data), out)
    text_path = write_config(file_name="wide.ini", dataset_dir=data)
    with open(text_path, "r", encoding="utf-8") as fin:
        text = fin.read()
    with open(text_path, "w", encoding="utf-8") as fout:
        fout.write(text.replace("enc_dim          = 16", "enc_dim          = 32"))

    assert main(["finetune", "-c", text_path, "--out", out]) == 1


def test_eval_group(write_config: Any,
                    tmp_path: Any) -> None:
    config_path = write_config()
    out = str(tmp_path / "run")
    synth_and_pretrain(config_path, out)
    assert main(["finetune", "-c", config_path, "--out", out]) == 0

    assert main(["eval", "-c", config_path, "--out", out,
                 "--checkpoint", os.path.join(out, "checkpoints", "group_last.pt")]) == 0

    report = read_json(os.path.join(out, "eval", "group_report.json"))
    assert report["task"] == "group"
    assert report["overall"] == "group_map"
    assert report["num_scenes"] == 4
    expected = ["group_ap_g1", "group_ap_g2", "group_ap_g3", "group_ap_g4", "group_ap_g5+", "group_map"]
    assert list(report["metrics"]) == expected
    # The toy scenes have 4 persons in 2 groups, no group reaches 4 members
    assert report["metrics"]["group_ap_g4"] is None
    assert report["metrics"]["group_ap_g5+"] is None
    assert 0.0 <= report["metrics"]["group_map"] <= 1.0
    present = [v for v in report["metrics"].values() if v is not None][:-1]
    assert report["metrics"]["group_map"] == pytest.approx(sum(present) / len(present))

    rows = read_csv(os.path.join(out, "eval", "group_report.csv"))
    assert [r["metric"] for r in rows] == expected
    assert rows[3]["value"] == "nan"
    assert float(rows[5]["value"]) == pytest.approx(report["metrics"]["group_map"])
    assert os.path.exists(os.path.join(out, "plots", "group_pr.png"))
    assert os.path.exists(os.path.join(out, "plots", "group_groups_scene0.png"))


def test_eval_forecast(write_config: Any,
                       tmp_path: Any) -> None:
    config_path = write_config(task="forecast")
    out = str(tmp_path / "run")
    synth_and_pretrain(config_path, out)
    assert main(["finetune", "-c", config_path, "--out", out]) == 0

    assert main(["eval", "-c", config_path, "--out", out,
                 "--checkpoint", os.path.join(out, "checkpoints", "forecast_last.pt")]) == 0

    report = read_json(os.path.join(out, "eval", "forecast_report.json"))
    metrics = report["metrics"]
    assert list(metrics) == ["vim_t1", "vim_t2", "vim_t4", "vim_overall", "mpjpe_h2", "mpjpe_h4"]
    assert all(v is not None and v >= 0.0 for v in metrics.values())
    assert os.path.exists(os.path.join(out, "plots", "forecast_vim.png"))


def test_eval_pretrain_checkpoint(write_config: Any,
                                  tmp_path: Any) -> None:
    config_path = write_config()
    out = str(tmp_path / "run")
    synth_and_pretrain(config_path, out)

    assert main(["eval", "-c", config_path, "--out", out,
                 "--checkpoint", os.path.join(out, "checkpoints", "pretrain_last.pt")]) == 0

    report = read_json(os.path.join(out, "eval", "pretrain_report.json"))
    assert report["overall"] == "reconstruction_mse"
    assert report["metrics"]["reconstruction_mse"] >= 0.0


def test_eval_needs_checkpoint(write_config: Any,
                               tmp_path: Any) -> None:
    out = str(tmp_path / "run")
    config_path = write_config()
    assert main(["synth", "-c", config_path, "--out", out]) == 0

    assert main(["eval", "-c", config_path, "--out", out]) == 1
    assert main(["eval", "-c", config_path, "--out", out, "--checkpoint", os.path.join(out, "missing.pt")]) == 1


@pytest.mark.parametrize("axis,values,expected", [
    ("mask_ratio", "0.45,0.5,0.55,0.6", [0.45, 0.5, 0.55, 0.6]),
    ("dec_layers", "2,3,4", [2, 3, 4]),
])
def test_ablate(write_config: Any,
                tmp_path: Any,
                axis: str,
                values: str,
                expected: List[float]) -> None:
    config_path = write_config(pretrain_epochs=1, finetune_epochs=1)
    out = str(tmp_path / "run")
    assert main(["synth", "-c", config_path, "--out", out]) == 0

    assert main(["ablate", "-c", config_path, "--out", out, "--axis", axis, "--values", values]) == 0

    rows = read_csv(os.path.join(out, "ablation", f"{axis}_table.csv"))
    assert [float(r[axis]) for r in rows] == expected
    assert all(r["metric"] == "group_map" for r in rows)
    table = read_json(os.path.join(out, "ablation", f"{axis}_table.json"))
    assert table["axis"] == axis
    assert len(table["rows"]) == len(expected)
    assert os.path.exists(os.path.join(out, "ablation", f"{axis}.png"))


def test_ablate_single_value_matches_direct_run(write_config: Any,
                                                tmp_path: Any) -> None:
    config_path = write_config(dataset_dir=str(tmp_path / "data"), pretrain_epochs=2, finetune_epochs=2)
    direct = str(tmp_path / "direct")
    synth_and_pretrain(config_path, direct)
    assert main(["finetune", "-c", config_path, "--out", direct]) == 0
    assert main(["eval", "-c", config_path, "--out", direct,
                 "--checkpoint", os.path.join(direct, "checkpoints", "group_last.pt")]) == 0
    sweep = str(tmp_path / "sweep")

    assert main(["ablate", "-c", config_path, "--out", sweep, "--axis", "mask_ratio", "--values", "0.5"]) == 0

    direct_value = read_json(os.path.join(direct, "eval", "group_report.json"))["metrics"]["group_map"]
    sweep_value = read_json(os.path.join(sweep, "ablation", "mask_ratio_table.json"))["rows"][0]["value"]
    if direct_value is None:
        assert sweep_value is None
    else:
        assert sweep_value == pytest.approx(direct_value, abs=1e-9)


def test_ablate_finetune_fraction(write_config: Any,
                                  tmp_path: Any) -> None:
    config_path = write_config(batch_size=1, pretrain_epochs=1, finetune_epochs=1)
    out = str(tmp_path / "run")
    assert main(["synth", "-c", config_path, "--out", out]) == 0

    assert main(["ablate", "-c", config_path, "--out", out,
                 "--axis", "finetune_fraction", "--values", "0.5,1.0"]) == 0

    rows = read_csv(os.path.join(out, "ablation", "finetune_fraction_table.csv"))
    assert [(float(r["finetune_fraction"]), r["arm"]) for r in rows] == [
        (0.5, "pretrained"), (0.5, "scratch"), (1.0, "pretrained"), (1.0, "scratch"),
    ]
    # Pre-trained once, on the whole corpus
    shared = os.path.join(out, "ablation", "finetune_fraction_pretrain")
    assert MetricsCsvLog.Read(os.path.join(shared, "pretrain_metrics.csv"))[-1]["step"] == "4"
    # Batch size 1: one step per labeled scene
    for value, steps in (("0.5", "2"), ("1.0", "4")):
        for arm in ("pretrained", "scratch"):
            sub_dir = os.path.join(out, "ablation", f"finetune_fraction_{value}_{arm}")
            assert MetricsCsvLog.Read(os.path.join(sub_dir, "group_metrics.csv"))[-1]["step"] == steps
            assert not os.path.exists(os.path.join(sub_dir, "pretrain_metrics.csv"))
    assert os.path.exists(os.path.join(out, "ablation", "finetune_fraction.png"))


def test_ablate_finetune_fraction_needs_finetuning_task(write_config: Any,
                                                        tmp_path: Any) -> None:
    config_path = write_config(task="pretrain")
    out = str(tmp_path / "run")
    assert main(["synth", "-c", config_path, "--out", out]) == 0

    assert main(["ablate", "-c", config_path, "--out", out,
                 "--axis", "finetune_fraction", "--values", "0.5"]) == 1


def test_ablate_argument_errors(write_config: Any,
                                tmp_path: Any) -> None:
    config_path = write_config()
    out = str(tmp_path / "run")
    assert main(["synth", "-c", config_path, "--out", out]) == 0

    # No axis, neither from the command line nor from the configuration
    assert main(["ablate", "-c", config_path, "--out", out]) == 1
    assert main(["ablate", "-c", config_path, "--out", out, "--axis", "mask_ratio", "--values", "1.0"]) == 1
    assert main(["ablate", "-c", config_path, "--out", out, "--axis", "dec_layers", "--values", "1.5"]) == 1


def test_invalid_configuration(write_config: Any,
                               tmp_path: Any) -> None:
    config_path = write_config()
    with open(config_path, "r", encoding="utf-8") as fin:
        text = fin.read()
    with open(config_path, "w", encoding="utf-8") as fout:
        fout.write(text.replace("enc_heads        = 2", "enc_heads        = 3"))

    assert main(["synth", "-c", config_path]) == 2
    assert main(["synth", "-c", str(tmp_path / "missing.ini")]) == 2
    assert main(["synth", "-c", write_config(file_name="ok.ini"), "--seed", "-1"]) == 2


def test_invalid_thread_cap(write_config: Any,
                            monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("SOCIALMAE_THREADS", "0")

    assert main(["synth", "-c", write_config()]) == 2


def test_missing_dataset(write_config: Any,
                         tmp_path: Any) -> None:
    assert main(["pretrain", "-c", write_config(), "--out", str(tmp_path / "empty")]) == 1
