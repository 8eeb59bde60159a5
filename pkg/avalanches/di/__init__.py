from dishka import FromDishka

FromDI = FromDishka

__all__ = [
    'FromDI',
]
