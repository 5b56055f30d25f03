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


#
# Classes
#

# Per-person action prediction: pose logits [N, P] and interaction logits [N, I]
class ActionPrediction:

    pose_logits: torch.Tensor
    interaction_logits: torch.Tensor
    threshold: float

    # Constructor
    def __init__(self,
                 pose_logits: torch.Tensor,
                 interaction_logits: torch.Tensor,
                 threshold: float = 0.6) -> None:
        self.pose_logits = pose_logits
        self.interaction_logits = interaction_logits
        self.threshold = threshold

    # Get pose class probabilities
    def PoseProbs(self) -> torch.Tensor:
        return torch.softmax(self.pose_logits, dim=-1)

    # Get interaction probabilities
    def InteractionProbs(self) -> torch.Tensor:
        return torch.sigmoid(self.interaction_logits)

    # Get predicted pose labels
    def PoseLabels(self) -> torch.Tensor:
        return self.pose_logits.argmax(dim=-1)

    # Get accepted interactions (probability >= threshold)
    def AcceptedInteractions(self) -> torch.Tensor:
        return self.InteractionProbs() >= self.threshold

    # Get class scores [N, P + I] used for ranking
    def Scores(self) -> torch.Tensor:
        return torch.cat([self.PoseProbs(), self.InteractionProbs()], dim=-1)
