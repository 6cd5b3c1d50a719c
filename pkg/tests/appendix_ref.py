"""Direct transcription of the published ENO-AO7 reference implementation.

Kept deliberately un-Pythonic (literal control flow, literal coefficient
expressions) so it can serve as an independent oracle for the compiled
kernel in differential tests.
"""


def eno_ao7_reference(Fi, delta=1e-5):
    DF = [0.0] * 9

    DFL = abs(-Fi[0] + 7 * Fi[1] - 21 * Fi[2] + 35 * Fi[3] - 35 * Fi[4] + 21 * Fi[5] - 7 * Fi[6] + Fi[7])
    DFR = abs(-Fi[1] + 7 * Fi[2] - 21 * Fi[3] + 35 * Fi[4] - 35 * Fi[5] + 21 * Fi[6] - 7 * Fi[7] + Fi[8])
    DF[8] = min(DFL, DFR)
    if DF[8] <= delta:
        return (-3 * Fi[1] + 25 * Fi[2] - 101 * Fi[3] + 319 * Fi[4] + 214 * Fi[5] - 38 * Fi[6] + 4 * Fi[7]) / 420

    DFL = abs(Fi[1] - 6 * Fi[2] + 15 * Fi[3] - 20 * Fi[4] + 15 * Fi[5] - 6 * Fi[6] + Fi[7])
    DFR = abs(Fi[2] - 6 * Fi[3] + 15 * Fi[4] - 20 * Fi[5] + 15 * Fi[6] - 6 * Fi[7] + Fi[8])
    DF[7] = min(DFL, DFR)
    if DF[7] <= delta:
        return (Fi[2] - 8 * Fi[3] + 37 * Fi[4] + 37 * Fi[5] - 8 * Fi[6] + Fi[7]) / 60.0

    DFL = abs(Fi[0] - 6 * Fi[1] + 15 * Fi[2] - 20 * Fi[3] + 15 * Fi[4] - 6 * Fi[5] + Fi[6])
    DFR = abs(Fi[1] - 6 * Fi[2] + 15 * Fi[3] - 20 * Fi[4] + 15 * Fi[5] - 6 * Fi[6] + Fi[7])
    DF[6] = min(DFL, DFR)
    if DF[6] <= delta:
        return (-Fi[1] + 7 * Fi[2] - 23 * Fi[3] + 57 * Fi[4] + 22 * Fi[5] - 2 * Fi[6]) / 60.0

    DFL = abs(-Fi[1] + 5 * Fi[2] - 10 * Fi[3] + 10 * Fi[4] - 5 * Fi[5] + Fi[6])
    DFR = abs(-Fi[2] + 5 * Fi[3] - 10 * Fi[4] + 10 * Fi[5] - 5 * Fi[6] + Fi[7])
    DF[5] = min(DFL, DFR)
    if DF[5] <= delta:
        return (2 * Fi[2] - 13 * Fi[3] + 47 * Fi[4] + 27 * Fi[5] - 3 * Fi[6]) / 60.0

    DFL = abs(Fi[2] - 4 * Fi[3] + 6 * Fi[4] - 4 * Fi[5] + Fi[6])
    DFR = abs(Fi[3] - 4 * Fi[4] + 6 * Fi[5] - 4 * Fi[6] + Fi[7])
    DF[4] = min(DFL, DFR)
    if DF[4] <= delta:
        return (-Fi[3] + 7 * Fi[4] + 7 * Fi[5] - Fi[6]) / 12.0

    DFL = abs(Fi[1] - 4 * Fi[2] + 6 * Fi[3] - 4 * Fi[4] + Fi[5])
    DFR = abs(Fi[2] - 4 * Fi[3] + 6 * Fi[4] - 4 * Fi[5] + Fi[6])
    DF[3] = min(DFL, DFR)
    if DF[3] <= delta:
        return (Fi[2] - 5 * Fi[3] + 13 * Fi[4] + 3 * Fi[5]) / 12.0

    DFL = abs(-Fi[2] + 3 * Fi[3] - 3 * Fi[4] + Fi[5])
    DFR = abs(-Fi[3] + 3 * Fi[4] - 3 * Fi[5] + Fi[6])
    DF[2] = min(DFL, DFR)
    if DF[2] <= delta:
        return (-Fi[3] + 5 * Fi[4] + 2 * Fi[5]) / 6.0

    DFL = abs(Fi[3] - 2 * Fi[4] + Fi[5])
    DFR = abs(Fi[4] - 2 * Fi[5] + Fi[6])
    DF[1] = min(DFL, DFR)
    if DF[1] <= delta:
        return 0.5 * (Fi[4] + Fi[5])

    DFL = (abs(Fi[3] - Fi[4]) + abs(Fi[2] - Fi[3])) / 2
    DFR = (abs(Fi[5] - Fi[4]) + abs(Fi[6] - Fi[5])) / 2
    DF[0] = min(DFL, DFR)
    if DF[0] <= delta:
        return Fi[4]

    MinDF = DF[0]
    Index = 0
    for k in range(1, 9):
        if DF[k] <= MinDF:
            MinDF = DF[k]
            Index = k

    if Index == 0:
        return Fi[4]
    if Index == 1:
        return 0.5 * (Fi[4] + Fi[5])
    if Index == 2:
        return (-Fi[3] + 5 * Fi[4] + 2 * Fi[5]) / 6.0
    if Index == 3:
        return (Fi[2] - 5 * Fi[3] + 13 * Fi[4] + 3 * Fi[5]) / 12.0
    if Index == 4:
        return (-Fi[3] + 7 * Fi[4] + 7 * Fi[5] - Fi[6]) / 12.0
    if Index == 5:
        return (2 * Fi[2] - 13 * Fi[3] + 47 * Fi[4] + 27 * Fi[5] - 3 * Fi[6]) / 60.0
    if Index == 6:
        return (-Fi[1] + 7 * Fi[2] - 23 * Fi[3] + 57 * Fi[4] + 22 * Fi[5] - 2 * Fi[6]) / 60.0
    if Index == 7:
        return (Fi[2] - 8 * Fi[3] + 37 * Fi[4] + 37 * Fi[5] - 8 * Fi[6] + Fi[7]) / 60.0
    return (-3 * Fi[1] + 25 * Fi[2] - 101 * Fi[3] + 319 * Fi[4] + 214 * Fi[5] - 38 * Fi[6] + 4 * Fi[7]) / 420
