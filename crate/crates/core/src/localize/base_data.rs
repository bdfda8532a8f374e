//! Hard-coded images of x^l (l = 0..4) under the two operators.

/// Sparse integer coefficient lists `(degree, coefficient)`.
pub type Coeffs = &'static [(u32, &'static str)];

pub(crate) const U1_X0: Coeffs = &[
    (0, "1"),
];
pub(crate) const U1_X1: Coeffs = &[
    (1, "41"),
    (2, "860"),
    (3, "6800"),
    (4, "24000"),
    (5, "32000"),
];
pub(crate) const U1_X2: Coeffs = &[
    (1, "86"),
    (2, "10195"),
    (3, "366600"),
    (4, "6534800"),
    (5, "68384000"),
    (6, "450720000"),
    (7, "1907200000"),
    (8, "5056000000"),
    (9, "7680000000"),
    (10, "5120000000"),
];
pub(crate) const U1_X3: Coeffs = &[
    (1, "51"),
    (2, "27495"),
    (3, "2836265"),
    (4, "128688900"),
    (5, "3343692000"),
    (6, "56283680000"),
    (7, "656205600000"),
    (8, "5502096000000"),
    (9, "33821312000000"),
    (10, "153192960000000"),
    (11, "506956800000000"),
    (12, "1195008000000000"),
    (13, "1904640000000000"),
    (14, "1843200000000000"),
    (15, "819200000000000"),
];
pub(crate) const U1_X4: Coeffs = &[
    (1, "12"),
    (2, "32674"),
    (3, "8579260"),
    (4, "831492275"),
    (5, "42958434000"),
    (6, "1396773180000"),
    (7, "31314949600000"),
    (8, "511802288800000"),
    (9, "6319880448000000"),
    (10, "60349364480000000"),
    (11, "452174745600000000"),
    (12, "2679038592000000000"),
    (13, "12574269440000000000"),
    (14, "46561935360000000000"),
    (15, "134544588800000000000"),
    (16, "297365504000000000000"),
    (17, "485949440000000000000"),
    (18, "553779200000000000000"),
    (19, "393216000000000000000"),
    (20, "131072000000000000000"),
];
pub(crate) const U0_X0: Coeffs = &[
    (2, "5705"),
    (3, "6840120"),
    (4, "2034152125"),
    (5, "280484938650"),
    (6, "22921365211325"),
    (7, "1260917405154520"),
    (8, "50400843190048480"),
    (9, "1539115922208139200"),
    (10, "37183654303328448000"),
    (11, "728924483359472640000"),
    (12, "11816089262411136000000"),
    (13, "160681440628058880000000"),
    (14, "1853291134193264640000000"),
    (15, "18284160727362809856000000"),
    (16, "155286793010086625280000000"),
    (17, "1140657222505472000000000000"),
    (18, "7269894420215070720000000000"),
    (19, "40277647277404979200000000000"),
    (20, "194099187864646451200000000000"),
    (21, "813054581193729638400000000000"),
    (22, "2954545150241538048000000000000"),
    (23, "9282005730758492160000000000000"),
    (24, "25080951875200614400000000000000"),
    (25, "57872525958316032000000000000000"),
    (26, "112916020309524480000000000000000"),
    (27, "183812885074411520000000000000000"),
    (28, "245082228994867200000000000000000"),
    (29, "260725452832768000000000000000000"),
    (30, "212837104353280000000000000000000"),
    (31, "125198296678400000000000000000000"),
    (32, "47244640256000000000000000000000"),
    (33, "8589934592000000000000000000000"),
];
pub(crate) const U0_X1: Coeffs = &[
    (2, "1596"),
    (3, "5311629"),
    (4, "3020673965"),
    (5, "693946917880"),
    (6, "88012336687140"),
    (7, "7203973630079449"),
    (8, "417078090095103516"),
    (9, "18123681491802321200"),
    (10, "615843754566814808000"),
    (11, "16857245810889643680000"),
    (12, "380061235251469769600000"),
    (13, "7179360858330987609600000"),
    (14, "115153019537919900211200000"),
    (15, "1584889574408762616832000000"),
    (16, "18875287036126384148480000000"),
    (17, "195815273618900539392000000000"),
    (18, "1778815480050553692160000000000"),
    (19, "14206927272980568637440000000000"),
    (20, "100058873107538207703040000000000"),
    (21, "622718357721614503116800000000000"),
    (22, "3428656886761288105984000000000000"),
    (23, "16707165479275661885440000000000000"),
    (24, "72013094304097396326400000000000000"),
    (25, "274190033219424878592000000000000000"),
    (26, "920048921836076924928000000000000000"),
    (27, "2711506126769477386240000000000000000"),
    (28, "6985969318446812364800000000000000000"),
    (29, "15637700398221885440000000000000000000"),
    (30, "30166681246666588160000000000000000000"),
    (31, "49621782059863244800000000000000000000"),
    (32, "68625507039156633600000000000000000000"),
    (33, "78284718944026624000000000000000000000"),
    (34, "71718179952394240000000000000000000000"),
    (35, "50720986785382400000000000000000000000"),
    (36, "25993142075392000000000000000000000000"),
    (37, "8589934592000000000000000000000000000"),
    (38, "1374389534720000000000000000000000000"),
];
pub(crate) const U0_X2: Coeffs = &[
    (2, "268"),
    (3, "2847432"),
    (4, "3155658820"),
    (5, "1202043333790"),
    (6, "233251365647870"),
    (7, "27857600543181592"),
    (8, "2282412359335489853"),
    (9, "137474599581860685500"),
    (10, "6382595114107468178000"),
    (11, "236333942045815117200000"),
    (12, "7159344666536530274720000"),
    (13, "180943148092126406540160000"),
    (14, "3874442157232846507737600000"),
    (15, "71154385951639684561408000000"),
    (16, "1131931871787660010234880000000"),
    (17, "15724017231814160548864000000000"),
    (18, "191993970181152296671232000000000"),
    (19, "2071679521214318766489600000000000"),
    (20, "19840725410941052260024320000000000"),
    (21, "169240207863514163393331200000000000"),
    (22, "1289257956753574377619456000000000000"),
    (23, "8789154839425847410032640000000000000"),
    (24, "53694599262146012197683200000000000000"),
    (25, "294194062113759948701696000000000000000"),
    (26, "1445922789195393074724864000000000000000"),
    (27, "6372283630042655710248960000000000000000"),
    (28, "25156363490877335666688000000000000000000"),
    (29, "88814063288837761662976000000000000000000"),
    (30, "279743502586000693002240000000000000000000"),
    (31, "783588083068217747046400000000000000000000"),
    (32, "1943797721585087728844800000000000000000000"),
    (33, "4247467234308952948736000000000000000000000"),
    (34, "8120384728408910725120000000000000000000000"),
    (35, "13465927624462381875200000000000000000000000"),
    (36, "19155038490681409536000000000000000000000000"),
    (37, "23036102962346721280000000000000000000000000"),
    (38, "22969782997939650560000000000000000000000000"),
    (39, "18482412505792512000000000000000000000000000"),
    (40, "11532502585835520000000000000000000000000000"),
    (41, "5236424127283200000000000000000000000000000"),
    (42, "1539316278886400000000000000000000000000000"),
    (43, "219902325555200000000000000000000000000000"),
];
pub(crate) const U0_X3: Coeffs = &[
    (2, "25"),
    (3, "1083750"),
    (4, "2419268600"),
    (5, "1533044850875"),
    (6, "451892277223875"),
    (7, "77776397020017600"),
    (8, "8876969029993551625"),
    (9, "727751880723215938525"),
    (10, "45237746915792486076500"),
    (11, "2216202089061921720156000"),
    (12, "88063763926314004467152000"),
    (13, "2901622367042821273526240000"),
    (14, "80660306943461135362236800000"),
    (15, "1918093917299266390588800000000"),
    (16, "39459730054782721266716160000000"),
    (17, "708795736244147980459443200000000"),
    (18, "11201811678733852133717299200000000"),
    (19, "156752971920695775627182080000000000"),
    (20, "1952565980789217283863347200000000000"),
    (21, "21745861234519182941633740800000000000"),
    (22, "217330181296111203156344832000000000000"),
    (23, "1954986367634769250929868800000000000000"),
    (24, "15867347909658771160720998400000000000000"),
    (25, "116421209420849214282399744000000000000000"),
    (26, "773301464019936672352829440000000000000000"),
    (27, "4654578055099292525988413440000000000000000"),
    (28, "25401759242372849348693196800000000000000000"),
    (29, "125704489323417659460550656000000000000000000"),
    (30, "563904329114669957135728640000000000000000000"),
    (31, "2291384934896565019580825600000000000000000000"),
    (32, "8423518909348688068345856000000000000000000000"),
    (33, "27966210361515509645574144000000000000000000000"),
    (34, "83658769333926385994956800000000000000000000000"),
    (35, "224821089074620615622656000000000000000000000000"),
    (36, "540741258958646666067968000000000000000000000000"),
    (37, "1158650329533680577413120000000000000000000000000"),
    (38, "2198994699321618726912000000000000000000000000000"),
    (39, "3670226839781351882752000000000000000000000000000"),
    (40, "5338951094289689477120000000000000000000000000000"),
    (41, "6691954927703970283520000000000000000000000000000"),
    (42, "7121217229055422627840000000000000000000000000000"),
    (43, "6307992271770668236800000000000000000000000000000"),
    (44, "4525788871530643456000000000000000000000000000000"),
    (45, "2526853642489692160000000000000000000000000000000"),
    (46, "1030022492900556800000000000000000000000000000000"),
    (47, "272678883688448000000000000000000000000000000000"),
    (48, "35184372088832000000000000000000000000000000000"),
];
pub(crate) const U0_X4: Coeffs = &[
    (2, "1"),
    (3, "296324"),
    (4, "1400331440"),
    (5, "1491537289180"),
    (6, "666654357758190"),
    (7, "164127484896644144"),
    (8, "25818034832153226421"),
    (9, "2843942677492333687050"),
    (10, "233247182152327524438975"),
    (11, "14876273050366789151536400"),
    (12, "761935276117868629545420000"),
    (13, "32118457754484194871176800000"),
    (14, "1135956912571962510189130400000"),
    (15, "34231269539693917027064800000000"),
    (16, "889959895359737292913435520000000"),
    (17, "20168696740441852125087521280000000"),
    (18, "401853770227841145701015936000000000"),
    (19, "7090293594621615513260024832000000000"),
    (20, "111455620826575249212238069760000000000"),
    (21, "1568967903706184088975184281600000000000"),
    (22, "19865297696614393785791188992000000000000"),
    (23, "227065713010913459721992798208000000000000"),
    (24, "2350395554799549839893043609600000000000000"),
    (25, "22090326137698781193612296192000000000000000"),
    (26, "188920535524484098164060192768000000000000000"),
    (27, "1472786798447713704939919769600000000000000000"),
    (28, "10480689728875682601093981798400000000000000000"),
    (29, "68152666405070998605987315712000000000000000000"),
    (30, "405254490887530431856613785600000000000000000000"),
    (31, "2204414239119153895179708006400000000000000000000"),
    (32, "10970036975349264582008478105600000000000000000000"),
    (33, "49929921460604339849107865600000000000000000000000"),
    (34, "207727909385809764269938442240000000000000000000000"),
    (35, "789224428145826945154469068800000000000000000000000"),
    (36, "2734666462414638550878257152000000000000000000000000"),
    (37, "8626866866620198090933534720000000000000000000000000"),
    (38, "24722506007012126262789406720000000000000000000000000"),
    (39, "64185847480498768484237312000000000000000000000000000"),
    (40, "150467914734947763855818752000000000000000000000000000"),
    (41, "317205685483135843705028608000000000000000000000000000"),
    (42, "598387657370971073308262400000000000000000000000000000"),
    (43, "1004032323013383412514816000000000000000000000000000000"),
    (44, "1487355820084245534081024000000000000000000000000000000"),
    (45, "1927442844590278705152000000000000000000000000000000000"),
    (46, "2159710523624808618393600000000000000000000000000000000"),
    (47, "2061307549285828316364800000000000000000000000000000000"),
    (48, "1642771482986634280960000000000000000000000000000000000"),
    (49, "1063549153298423480320000000000000000000000000000000000"),
    (50, "537321656791806771200000000000000000000000000000000000"),
    (51, "198721333557723136000000000000000000000000000000000000"),
    (52, "47850746040811520000000000000000000000000000000000000"),
    (53, "5629499534213120000000000000000000000000000000000000"),
];

pub(crate) const PLAIN_IMAGES: [Coeffs; 5] = [U1_X0, U1_X1, U1_X2, U1_X3, U1_X4];
pub(crate) const WEIGHTED_IMAGES: [Coeffs; 5] = [U0_X0, U0_X1, U0_X2, U0_X3, U0_X4];
