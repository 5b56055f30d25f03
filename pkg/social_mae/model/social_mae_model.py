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
import torch
from torch import nn

from social_mae.model.latent_batch import LatentBatch
from social_mae.model.mae_decoder import MaeDecoder
from social_mae.model.model_config import ModelConfig
from social_mae.model.model_ex import ModelArgumentError
from social_mae.model.token_tensors import TokenTensors
from social_mae.model.trajectory_encoder import TrajectoryEncoder
from social_mae.model.weight_init import WeightInit, WeightInitConst
from social_mae.token.mask_plan import MaskPlan
from social_mae.token.token_batch import TokenBatch
from social_mae.token.tube_mask_sampler import TubeMaskSampler


#
# Classes
#

# Asymmetric masked autoencoder: deep encoder over visible tokens, shallow decoder over all slots
class SocialMae(nn.Module):

    config: ModelConfig
    encoder: TrajectoryEncoder
    decoder: MaeDecoder

    # Constructor
    def __init__(self,
                 config: ModelConfig) -> None:
        super().__init__()
        self.config = config
        self.encoder = TrajectoryEncoder(config)
        self.decoder = MaeDecoder(config)
        self.apply(WeightInit.Apply)
        nn.init.trunc_normal_(self.decoder.mask_token, std=WeightInitConst.STD)

    # Encode the visible view of a token batch
    def Encode(self,
               visible: TokenBatch) -> LatentBatch:
        tokens = TokenTensors.FromBatch(visible, self.__DType())
        return LatentBatch(self.encoder(tokens), visible)

    # Decode latents of the visible tokens into Cartesian trajectories for all K slots: [K, coord_dim * T]
    def DecodeReconstruct(self,
                          latents: LatentBatch,
                          batch: TokenBatch,
                          plan: MaskPlan) -> torch.Tensor:
        if plan.num_tokens != batch.NumTokens():
            raise ModelArgumentError(f"Mask plan is for {plan.num_tokens} tokens, batch has {batch.NumTokens()}")
        if latents.NumTokens() != plan.NumVisible() or \
                not (latents.tokens.token_index == batch.token_index[plan.visible]).all():
            raise ModelArgumentError(
                f"Latents of {latents.NumTokens()} tokens do not match the {plan.NumVisible()} visible tokens of the plan"
            )
        # Slot descriptors only, masked content is never read
        slots = TokenTensors.FromBatch(batch, self.__DType(), with_content=False)
        return self.decoder(latents.Final(),
                            slots,
                            torch.as_tensor(plan.visible, dtype=torch.long),
                            torch.as_tensor(plan.masked, dtype=torch.long))

    # Forward: mask, encode, reconstruct
    def forward(self,
                batch: TokenBatch,
                plan: MaskPlan) -> torch.Tensor:
        visible, _ = TubeMaskSampler.Apply(batch, plan)
        return self.DecodeReconstruct(self.Encode(visible), batch, plan)

    # Get number of encoder parameters
    def EncoderParameterCount(self) -> int:
        return sum(p.numel() for p in self.encoder.parameters())

    # Get number of decoder parameters
    def DecoderParameterCount(self) -> int:
        return sum(p.numel() for p in self.decoder.parameters())

    # Get parameter data type
    def __DType(self) -> torch.dtype:
        return self.encoder.content_proj.weight.dtype
