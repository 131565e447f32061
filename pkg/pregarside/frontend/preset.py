import os

from pregarside.presentation import PresentationSpec, load_presentation

PRESET_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'presets')

PRESETS = ('FREE2', 'B3', 'B4', 'B3B3', 'RA2')


def preset_path(name: str) -> str:
    name = name.upper()
    if name not in PRESETS:
        raise ValueError(f'unknown preset {name!r}, expected one of {", ".join(PRESETS)}')
    return os.path.join(PRESET_DIR, f'{name}.txt')


def load_preset(name: str) -> PresentationSpec:
    spec = load_presentation(preset_path(name))
    return PresentationSpec(spec.atoms, spec.relations, name=name.upper())
