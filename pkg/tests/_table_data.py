"""Frozen reference values for the published observer-count table.

Mantissas are 8 significant digits; exponents are decimal.  Keyed as
PUBLISHED_COUNTS[r][K] = (mantissa, exponent) for the 50 even r rows
and the five K columns.
"""

PUBLISHED_COUNTS = {
    0: {1100: (1.2582567, 306), 100: (3.6603234, 201), 10: (2.6561399, 97), 5: (1.6069380, 62), 2: (1.0000000, 2)},
    2: {1100: (9.1968147, 300), 100: (3.6599499, 199), 10: (3.5349615, 98), 5: (2.4360176, 64), 2: (9.7020000, 5)},
    4: {1100: (7.0906332, 298), 100: (3.4773445, 199), 10: (4.0638965, 100), 5: (1.4177623, 67), 2: (9.0345024, 9)},
    6: {1100: (5.2425320, 296), 100: (3.1683182, 199), 10: (4.4803204, 102), 5: (7.9128857, 69), 2: (8.0678106, 13)},
    8: {1100: (3.7137826, 294), 100: (2.7658535, 199), 10: (4.7325459, 104), 5: (4.2314156, 72), 2: (6.9028188, 17)},
    10: {1100: (2.5182857, 292), 100: (2.3112275, 199), 10: (4.7851297, 106), 5: (2.1659559, 75), 2: (5.6534086, 21)},
    12: {1100: (1.6329854, 290), 100: (1.8469068, 199), 10: (4.6268069, 108), 5: (1.0602354, 78), 2: (4.4277496, 25)},
    14: {1100: (1.0115902, 288), 100: (1.4099129, 199), 10: (4.2737987, 110), 5: (4.9579258, 80), 2: (3.3128423, 29)},
    16: {1100: (5.9800861, 285), 100: (1.0271175, 199), 10: (3.7672744, 112), 5: (2.2124744, 83), 2: (2.3653694, 33)},
    18: {1100: (3.3697990, 283), 100: (7.1324983, 198), 10: (3.1654407, 114), 5: (9.4113129, 85), 2: (1.6098704, 37)},
    20: {1100: (1.8079384, 281), 100: (4.7157013, 198), 10: (2.5323525, 116), 5: (3.8115817, 88), 2: (1.0431960, 41)},
    22: {1100: (9.2238011, 278), 100: (2.9648150, 198), 10: (1.9264637, 118), 5: (1.4679354, 91), 2: (6.4281738, 44)},
    24: {1100: (4.4690875, 276), 100: (1.7702375, 198), 10: (1.3918106, 120), 5: (5.3689737, 93), 2: (3.7617673, 48)},
    26: {1100: (2.0536029, 274), 100: (1.0024301, 198), 10: (9.5364800, 121), 5: (1.8623628, 96), 2: (2.0877809, 52)},
    28: {1100: (8.9366846, 271), 100: (5.3757503, 197), 10: (6.1881159, 123), 5: (6.1178617, 98), 2: (1.0973376, 56)},
    30: {1100: (3.6773709, 269), 100: (2.7259952, 197), 10: (3.7969057, 125), 5: (1.9003608, 101), 2: (5.4537680, 59)},
    32: {1100: (1.4285652, 267), 100: (1.3050066, 197), 10: (2.1993928, 127), 5: (5.5728080, 103), 2: (2.5589079, 63)},
    34: {1100: (5.2302616, 264), 100: (5.8879085, 196), 10: (1.2007055, 129), 5: (1.5401848, 106), 2: (1.1315491, 67)},
    36: {1100: (1.8014464, 262), 100: (2.4991021, 196), 10: (6.1665865, 130), 5: (4.0044805, 108), 2: (4.7072442, 70)},
    38: {1100: (5.8258354, 259), 100: (9.9596905, 195), 10: (2.9736650, 132), 5: (9.7759381, 110), 2: (1.8386496, 74)},
    40: {1100: (1.7654032, 257), 100: (3.7192600, 195), 10: (1.3436561, 134), 5: (2.2362458, 113), 2: (6.7294575, 77)},
    42: {1100: (5.0018254, 254), 100: (1.2985724, 195), 10: (5.6765321, 135), 5: (4.7827708, 115), 2: (2.3028204, 81)},
    44: {1100: (1.3218922, 252), 100: (4.2292041, 194), 10: (2.2369741, 137), 5: (9.5416277, 117), 2: (7.3506026, 84)},
    46: {1100: (3.2505518, 249), 100: (1.2815770, 194), 10: (8.2022385, 138), 5: (1.7711646, 120), 2: (2.1831290, 88)},
    48: {1100: (7.4172159, 246), 100: (3.6037407, 193), 10: (2.7907863, 140), 5: (3.0508311, 122), 2: (6.0167034, 91)},
    50: {1100: (1.5659782, 244), 100: (9.3761236, 192), 10: (8.7858088, 141), 5: (4.8622621, 124), 2: (1.5342594, 95)},
    52: {1100: (3.0494930, 241), 100: (2.2500401, 192), 10: (2.5511386, 143), 5: (7.1475252, 126), 2: (3.6085781, 98)},
    54: {1100: (5.4586840, 238), 100: (4.9633574, 191), 10: (6.8093353, 144), 5: (9.6580935, 128), 2: (7.8017458, 101)},
    56: {1100: (8.9486549, 235), 100: (1.0026985, 191), 10: (1.6645042, 146), 5: (1.1951891, 131), 2: (1.5447457, 105)},
    58: {1100: (1.3380740, 233), 100: (1.8476415, 190), 10: (3.7112278, 147), 5: (1.3490697, 133), 2: (2.7898107, 108)},
    60: {1100: (1.8168898, 230), 100: (3.0916560, 189), 10: (7.5140909, 148), 5: (1.3827964, 135), 2: (4.5752895, 111)},
    62: {1100: (2.2293661, 227), 100: (4.6748640, 188), 10: (1.3748003, 150), 5: (1.2808152, 137), 2: (6.7805790, 114)},
    64: {1100: (2.4586134, 224), 100: (6.3533505, 187), 10: (2.2607828, 151), 5: (1.0662786, 139), 2: (9.0317313, 117)},
    66: {1100: (2.4223775, 221), 100: (7.7139956, 186), 10: (3.3213969, 152), 5: (7.9304473, 140), 2: (1.0747760, 121)},
    68: {1100: (2.1179239, 218), 100: (8.3113758, 185), 10: (4.3301175, 153), 5: (5.2340952, 142), 2: (1.1349635, 124)},
    70: {1100: (1.6307895, 215), 100: (7.8865212, 184), 10: (4.9716164, 154), 5: (3.0423178, 144), 2: (1.0555160, 127)},
    72: {1100: (1.0963736, 212), 100: (6.5338795, 183), 10: (4.9838920, 155), 5: (1.5439763, 146), 2: (8.5707902, 129)},
    74: {1100: (6.3723598, 208), 100: (4.6799137, 182), 10: (4.3193730, 156), 5: (6.7741960, 147), 2: (6.0166947, 132)},
    76: {1100: (3.1656008, 205), 100: (2.8649609, 181), 10: (3.1995356, 157), 5: (2.5403235, 149), 2: (3.6100168, 135)},
    78: {1100: (1.3262069, 202), 100: (1.4791044, 180), 10: (1.9987222, 158), 5: (8.0337731, 150), 2: (1.8266685, 138)},
    80: {1100: (4.6117440, 198), 100: (6.3383721, 178), 10: (1.0363745, 159), 5: (2.1088654, 152), 2: (7.6720078, 140)},
    82: {1100: (1.3058579, 195), 100: (2.2117368, 177), 10: (4.3758034, 159), 5: (4.5076999, 153), 2: (2.6238267, 143)},
    84: {1100: (2.9408267, 191), 100: (6.1380718, 175), 10: (1.4694056, 160), 5: (7.6630898, 154), 2: (7.1368085, 145)},
    86: {1100: (5.1132066, 187), 100: (1.3151669, 174), 10: (3.8095700, 160), 5: (1.0057805, 156), 2: (1.4987298, 148)},
    88: {1100: (6.6042355, 183), 100: (2.0933174, 172), 10: (7.3369497, 160), 5: (9.8063602, 156), 2: (2.3380185, 150)},
    90: {1100: (6.0147815, 179), 100: (2.3494022, 170), 10: (9.9637588, 160), 5: (6.7418726, 157), 2: (2.5718203, 152)},
    92: {1100: (3.5855598, 175), 100: (1.7259153, 168), 10: (8.8566745, 160), 5: (3.0338427, 158), 2: (1.8517106, 154)},
    94: {1100: (1.2468404, 171), 100: (7.3960252, 165), 10: (4.5923497, 160), 5: (7.9638371, 158), 2: (7.7771846, 155)},
    96: {1100: (2.0646454, 166), 100: (1.5092389, 163), 10: (1.1339135, 160), 5: (9.9547963, 158), 2: (1.5554369, 157)},
    98: {1100: (1.0256551, 161), 100: (9.2392953, 159), 10: (8.3993594, 158), 5: (3.7330486, 158), 2: (9.3326215, 157)},
}
