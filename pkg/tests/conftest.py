import numpy as np

from fusionweave import FusionFrame, span_of


def coordinate_lines(n):
    eye = np.eye(n)
    return [span_of([eye[:, i]]) for i in range(n)]


def coordinate_frame(n):
    return FusionFrame.of_subspaces(coordinate_lines(n))


def enlarged_coordinate_frame():
    # first line grown to the xy-plane, a frame that is not a Riesz basis
    return FusionFrame.of_subspaces(
        [
            span_of([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]),
            span_of([[0.0, 1.0, 0.0]]),
            span_of([[0.0, 0.0, 1.0]]),
        ]
    )


def plane_axis_frame():
    return FusionFrame.of_subspaces(
        [span_of([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]), span_of([[0.0, 0.0, 1.0]])]
    )


def plane_tilted_frame():
    return FusionFrame.of_subspaces(
        [span_of([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]), span_of([[0.0, 0.5, 1.0]])]
    )
