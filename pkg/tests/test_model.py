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
from typing import Any, List

import numpy as np
import pytest
import torch

from social_mae.model.loss_scope_types import LossScopeTypes
from social_mae.model.mae_stepper import MaeStepper
from social_mae.model.model_config import ModelConfig
from social_mae.model.model_ex import ModelArgumentError
from social_mae.model.pretrain_step import PretrainStep
from social_mae.model.reconstruction_loss import ReconstructionLoss
from social_mae.model.social_mae_model import SocialMae
from social_mae.model.token_tensors import TokenTensors
from social_mae.token.mask_plan import MaskPlan
from social_mae.token.scene_tokenizer import SceneTokenizer, TokenizedScene
from social_mae.token.tube_mask_sampler import TubeMaskSampler


#
# Functions
#

# Tokenize the history window of a toy scene
def history_sample(make_scene: Any,
                   seed: int,
                   frames: int = 6) -> TokenizedScene:
    return SceneTokenizer.Tokenize(make_scene(seed).Slice(0, frames), frames)


# Ground truth rows laid out like the reconstruction output
def ground_truth_rows(sample: TokenizedScene) -> torch.Tensor:
    traj = sample.centered.scene.trajectories
    n, j, t, c = traj.shape
    return torch.as_tensor(np.transpose(traj, (0, 1, 3, 2)).reshape(n * j, c * t))


# Copy of all parameters
def parameter_snapshot(model: torch.nn.Module) -> List[torch.Tensor]:
    return [p.detach().clone() for p in model.parameters()]


#
# Tests
#

def test_config_validation() -> None:
    with pytest.raises(ModelArgumentError):
        ModelConfig(enc_dim=10, enc_heads=4)
    with pytest.raises(ModelArgumentError):
        ModelConfig(mask_ratio=1.0)
    with pytest.raises(ModelArgumentError):
        ModelConfig(coord_dim=4)
    with pytest.raises(ModelArgumentError):
        ModelConfig(dec_dim=8, dec_heads=4, pos_dim=8)
    with pytest.raises(ModelArgumentError):
        ModelConfig(enc_layers=0)


def test_config_dict_round_trip(toy_model_config: ModelConfig) -> None:
    restored = ModelConfig.FromDict(toy_model_config.ToDict())

    assert restored == toy_model_config
    assert restored.loss_scope == LossScopeTypes.MASKED_ONLY


def test_full_scale_widths() -> None:
    config = ModelConfig()

    assert config.enc_dim == 1024
    assert config.dec_dim == config.enc_dim + config.pos_dim


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("j", [2, 3, 4])
@pytest.mark.parametrize("t", [4, 15])
@pytest.mark.parametrize("c", [2, 3])
def test_reconstruction_shape(make_scene: Any,
                              toy_model_config: ModelConfig,
                              n: int,
                              j: int,
                              t: int,
                              c: int) -> None:
    config = ModelConfig.FromDict({**toy_model_config.ToDict(), "num_joints": j, "history_frames": t, "coord_dim": c})
    torch.manual_seed(0)
    model = SocialMae(config)
    scene = make_scene(0, num_persons=n, num_joints=j, num_frames=t, coord_dim=c, num_groups=1)
    sample = SceneTokenizer.Tokenize(scene, t)
    plan = TubeMaskSampler.Sample(sample.tokens.NumTokens(), 0.5, 1)

    pred = model(sample.tokens, plan)

    assert pred.shape == (n * j, c * t)
    assert model.Encode(TubeMaskSampler.Apply(sample.tokens, plan)[0]).NumLayers() == 2


def test_mask_token_gradient(make_scene: Any,
                             toy_model_config: ModelConfig) -> None:
    torch.manual_seed(0)
    model = SocialMae(toy_model_config)
    sample = history_sample(make_scene, 0)
    plan = TubeMaskSampler.Sample(sample.tokens.NumTokens(), 0.5, 1)

    ReconstructionLoss.Compute(model(sample.tokens, plan), sample.centered, plan).backward()

    grad = model.decoder.mask_token.grad
    assert grad is not None
    assert torch.count_nonzero(grad) > 0


def test_masked_content_never_read(make_scene: Any,
                                   toy_model_config: ModelConfig) -> None:
    torch.manual_seed(0)
    model = SocialMae(toy_model_config).eval()
    sample = history_sample(make_scene, 2)
    plan = TubeMaskSampler.Sample(sample.tokens.NumTokens(), 0.5, 7)

    with torch.no_grad():
        clean = model(sample.tokens, plan)
        sample.tokens.content[plan.masked] = np.nan
        poisoned = model(sample.tokens, plan)

    assert torch.isfinite(poisoned).all()
    assert torch.equal(clean, poisoned)


def test_encoder_rejects_person_overflow(make_scene: Any,
                                         toy_model_config: ModelConfig) -> None:
    model = SocialMae(toy_model_config)
    scene = make_scene(0, num_persons=9, num_groups=2)
    sample = SceneTokenizer.Tokenize(scene.Slice(0, 6), 6)

    with pytest.raises(ModelArgumentError):
        model.Encode(sample.tokens)


def test_encoder_gradcheck(make_scene: Any) -> None:
    config = ModelConfig(enc_layers=1, enc_heads=2, enc_dim=8, dec_layers=1, dec_heads=2, dec_dim=16,
                         num_joints=4, history_frames=6, max_persons=4)
    torch.manual_seed(0)
    model = SocialMae(config).double()
    sample = history_sample(make_scene, 0)
    tokens = TokenTensors.FromBatch(sample.tokens, torch.float64)

    def encode(content: torch.Tensor) -> torch.Tensor:
        return model.encoder(TokenTensors(content, tokens.joint_type_index, tokens.person_index,
                                          tokens.global_offset, tokens.padding))[-1]

    content = tokens.content.clone().requires_grad_(True)
    assert torch.autograd.gradcheck(encode, (content,), eps=1e-6, atol=1e-5)


def test_decoder_gradcheck(make_scene: Any) -> None:
    config = ModelConfig(enc_layers=1, enc_heads=2, enc_dim=8, dec_layers=1, dec_heads=2, dec_dim=16,
                         num_joints=4, history_frames=6, max_persons=4)
    torch.manual_seed(0)
    model = SocialMae(config).double()
    sample = history_sample(make_scene, 0)
    plan = TubeMaskSampler.Sample(sample.tokens.NumTokens(), 0.5, 3)
    slots = TokenTensors.FromBatch(sample.tokens, torch.float64, with_content=False)
    visible = torch.as_tensor(plan.visible)
    masked = torch.as_tensor(plan.masked)

    def decode(latents: torch.Tensor) -> torch.Tensor:
        pred = model.decoder(latents, slots, visible, masked)
        return ReconstructionLoss.Compute(pred, sample.centered, plan)

    latents = torch.randn(plan.NumVisible(), 8, dtype=torch.float64, requires_grad=True)
    assert torch.autograd.gradcheck(decode, (latents,), eps=1e-6, atol=1e-5)


def test_reconstruction_loss_scope(make_scene: Any) -> None:
    sample = history_sample(make_scene, 4)
    plan = MaskPlan.FromMasked(16, [0, 5, 10, 15])
    gt = ground_truth_rows(sample)

    assert float(ReconstructionLoss.Compute(gt.clone(), sample.centered, plan)) == 0.0
    assert float(ReconstructionLoss.Compute(gt + 1.0, sample.centered, plan)) == pytest.approx(1.0)

    off_visible = gt.clone()
    off_visible[plan.visible] += 2.0
    assert float(ReconstructionLoss.Compute(off_visible, sample.centered, plan,
                                            LossScopeTypes.MASKED_ONLY)) == 0.0
    assert float(ReconstructionLoss.Compute(off_visible, sample.centered, plan,
                                            LossScopeTypes.ALL_TOKENS)) == pytest.approx(4.0 * 12 / 16)


def test_reconstruction_loss_ignores_padding(make_scene: Any) -> None:
    sample = SceneTokenizer.Tokenize(make_scene(4).Slice(0, 4), 6, num_persons=5)
    plan = MaskPlan.FromMasked(20, list(range(20)))
    pred = ground_truth_rows(sample)
    # Padded frames and the padded person are ignored whatever is predicted there
    pred[:, 4:6] = 100.0
    pred[16:] = -100.0

    assert float(ReconstructionLoss.Compute(pred, sample.centered, plan)) == 0.0


def test_zero_learning_rate(make_scene: Any,
                            toy_model_config: ModelConfig) -> None:
    torch.manual_seed(0)
    model = SocialMae(toy_model_config)
    stepper = MaeStepper(model.parameters(), 0.0, 5, 0.1, 0.75)
    batch = [history_sample(make_scene, 0), history_sample(make_scene, 1)]
    before = parameter_snapshot(model)

    loss = PretrainStep.Step(model, stepper, batch, [1, 2], LossScopeTypes.MASKED_ONLY)

    assert np.isfinite(loss)
    for old, new in zip(before, model.parameters()):
        assert torch.equal(old, new)


def test_learning_rate_decay(toy_model_config: ModelConfig) -> None:
    model = SocialMae(toy_model_config)
    stepper = MaeStepper(model.parameters(), 1e-3, 8, 0.1, 0.75)
    rates = []
    for _ in range(8):
        rates.append(stepper.LearningRate())
        stepper.EndEpoch()

    assert stepper.decay_epoch == 6
    assert rates[:6] == [pytest.approx(1e-3)] * 6
    assert rates[6:] == [pytest.approx(1e-4)] * 2


def test_parameter_counts(toy_model_config: ModelConfig) -> None:
    model = SocialMae(toy_model_config)

    assert model.EncoderParameterCount() > model.DecoderParameterCount() > 0
    assert (model.EncoderParameterCount() + model.DecoderParameterCount() ==
            sum(p.numel() for p in model.parameters()))


def test_encoder_token_order_equivariance(make_scene: Any,
                                          toy_model_config: ModelConfig,
                                          rng: np.random.Generator) -> None:
    torch.manual_seed(0)
    model = SocialMae(toy_model_config).eval()
    sample = history_sample(make_scene, 3)
    visible, _ = TubeMaskSampler.Apply(sample.tokens, TubeMaskSampler.Sample(16, 0.5, 2))
    order = rng.permutation(visible.NumTokens())

    with torch.no_grad():
        latents = model.Encode(visible).layers
        permuted = model.Encode(visible.Permute(order)).layers
        again = model.Encode(visible).layers

    assert latents.shape == (3, 8, 16)
    assert torch.allclose(permuted, latents[:, order], atol=1e-5)
    assert torch.equal(again, latents)


@pytest.mark.slow
def test_overfit_two_scenes(make_scene: Any) -> None:
    config = ModelConfig(enc_layers=2, enc_heads=4, enc_dim=32, dec_layers=1, dec_heads=4, dec_dim=40,
                         num_joints=4, history_frames=6, max_persons=8)
    torch.manual_seed(0)
    model = SocialMae(config)
    stepper = MaeStepper(model.parameters(), 2e-3, 1000, 0.1, 0.75)
    batch = [history_sample(make_scene, 0), history_sample(make_scene, 1)]

    losses = [PretrainStep.Step(model, stepper, batch, [5, 6], LossScopeTypes.MASKED_ONLY) for _ in range(500)]

    assert losses[-1] < 0.1 * losses[0]
