"""Desk-scale Arabic dialect recognition lab.

Pipeline stages: WAV ingestion and preprocessing (``audio``), augmentation
(``augment``), MFCC and wavelet feature extraction (``features``), a small
from-scratch neural-network engine (``nn``), the four feature/classifier
combinations (``models``), training (``trainer``), metrics (``evaluate``),
dataset handling (``corpus``) and the command-line front end (``cli``).
"""

__version__ = "0.1.0"
