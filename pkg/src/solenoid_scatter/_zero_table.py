"""Zeros of J0 and J1 used by the near-zero Taylor branch.

Generated by tools/gen_zero_table.py; do not edit by hand.
Each row is (hi, lo, slope): the zero is hi + lo and slope is the
derivative of the function there.
"""

ZMIN = 23.0
ZMAX = 112.0

J0_ZEROS = (
    (24.352471530749302, 9.169067133951066e-16, 0.16170155068925002),
    (27.493479132040253, 1.6191941793302084e-15, -0.15218121377059454),
    (30.634606468431976, -5.390359852115135e-16, 0.1441659776863732),
    (33.77582021357357, 1.454224241250595e-15, -0.13729694340850299),
    (36.917098353664045, -9.276489358569364e-16, 0.13132462666866793),
    (40.05842576462824, -2.6782651477149736e-16, -0.12606949712727342),
    (43.19979171317673, 8.55713303876733e-16, 0.12139862477175015),
    (46.341188371661815, -9.07797413846536e-16, -0.11721119889066538),
    (49.482609897397815, 2.382582551864974e-15, 0.1134291926164298),
    (52.624051841115, -1.7558469541662502e-15, -0.10999114304627804),
    (55.76551075501998, -2.2474605782970157e-15, 0.10684788825471286),
    (58.90698392608094, 1.8824761533828545e-15, -0.10395957286936208),
    (62.048469190227166, 3.5462261037501757e-15, 0.10129349893394325),
    (65.18996480020687, -5.461873855822896e-15, -0.0988225538011999),
    (68.3314693298568, -3.3933989376620325e-15, 0.09652404046467991),
    (71.47298160359374, -4.706746819114939e-15, -0.0943787939846764),
    (74.61450064370183, 6.888551420729803e-15, 0.0923705048235533),
    (77.75602563038805, 2.8877288913457725e-15, -0.09048519416295771),
    (80.89755587113763, 1.2818595160472018e-15, 0.08871080244096978),
    (84.0390907769382, -5.246120359886215e-15, -0.0870368633240976),
    (87.18062984364116, -2.988671082559626e-15, 0.08545424291091484),
    (90.32217263721049, -5.335106266169793e-15, -0.08395492928345757),
    (93.46371878194478, -3.2760886018946086e-15, 0.0825318613083098),
    (96.60526795099626, 4.374792211855971e-15, -0.08117878831953207),
    (99.7468198586806, 1.0538352759948803e-15, 0.07989015430874274),
    (102.8883742541948, -6.386566600790279e-15, -0.0786610017193049),
    (106.02993091645162, -3.317345989748548e-15, 0.07748689103965989),
    (109.17148964980538, 3.156801612233754e-15, -0.0763638332182914),
)

J1_ZEROS = (
    (25.903672087618382, 4.894530726419825e-16, 0.15672498625285222),
    (29.046828534916855, -2.799892014010185e-16, -0.14801110997277755),
    (32.189679910974405, -1.5481609125503839e-15, 0.14060579818398225),
    (35.33230755008387, -3.2611649318496424e-15, -0.1342112403100007),
    (38.474766234771614, 7.193676286738655e-16, 0.12861662207206995),
    (41.61709421281445, 5.700452680227534e-16, -0.12366796076983713),
    (44.75931899765282, 2.3276041019911167e-15, 0.11924981201068947),
    (47.90146088718545, -3.46654782460118e-15, -0.11527369412016795),
    (51.04353518357151, 2.7050774005019414e-15, 0.1116704968592113),
    (54.18555364106132, 2.2014149402021727e-15, -0.10838534894368256),
    (57.32752543790101, 1.4475427878291946e-15, 0.10537405539523521),
    (60.46945784534749, -2.384395520551382e-16, -0.10260056710339717),
    (63.61135669848123, 1.7663673646888642e-15, 0.10003514681152326),
    (66.75322673409849, 3.245960673429821e-15, -0.09765301578317331),
    (69.89507183749578, -3.3751535816297383e-15, 0.09543333902053534),
    (73.03689522557383, 5.533153216564837e-15, -0.09335845329045497),
    (76.17869958464146, -6.4981027931822064e-15, 0.09141327215592128),
    (79.3204871754763, -2.5086501675588216e-15, -0.08958482196485568),
    (82.46225991437356, -4.833006597692519e-15, 0.08786187603941047),
    (85.60401943635023, 2.932033215668997e-15, -0.08623466341328839),
    (88.7457671449263, 2.322204476527005e-15, 0.08469463480342414),
    (91.88750425169499, -6.527554548302299e-15, -0.08323427298222627),
    (95.0292318080447, -3.668959254661093e-15, 0.0818469379264858),
    (98.17095073079078, 3.4801090981385157e-15, -0.08052673944840286),
    (101.31266182303872, 6.440841344215011e-15, 0.07926843172451872),
    (104.45436579128275, 5.954599019603359e-15, -0.07806732540794852),
    (107.59606325950917, 6.905220426274634e-15, 0.0769192139613909),
    (110.73775478089921, 6.013639970267598e-15, -0.07582031156916715),
)
