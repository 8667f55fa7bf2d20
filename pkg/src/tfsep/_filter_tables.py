"""Orthonormal scaling-filter tables (generated by scripts/generate_filter_tables.py).

Each entry is the reconstruction low-pass filter of an orthogonal wavelet
family member, normalized so the coefficients sum to sqrt(2). The other
three filters of each bank are derived in tfsep.wavelet. The tables are
not trusted blindly: the test suite validates every bank through the
perfect-reconstruction and vanishing-moment checks.
"""

SCALING_FILTERS: dict[str, tuple[float, ...]] = {
    "haar": (
        0.7071067811865476,
        0.7071067811865476,
    ),
    "db1": (
        0.7071067811865476,
        0.7071067811865476,
    ),
    "db2": (
        -0.12940952255126037,
        0.2241438680420134,
        0.8365163037378079,
        0.48296291314453416,
    ),
    "db3": (
        0.03522629188570953,
        -0.08544127388202666,
        -0.13501102001025458,
        0.45987750211849154,
        0.8068915093110925,
        0.33267055295008263,
    ),
    "db4": (
        -0.010597401785069032,
        0.0328830116668852,
        0.030841381835560764,
        -0.18703481171909309,
        -0.027983769416859854,
        0.6308807679298589,
        0.7148465705529157,
        0.2303778133088965,
    ),
    "db5": (
        0.0033357252854737712,
        -0.012580751999081999,
        -0.006241490212798274,
        0.07757149384004572,
        -0.032244869584638375,
        -0.24229488706638203,
        0.13842814590132074,
        0.7243085284377729,
        0.6038292697971896,
        0.16010239797419293,
    ),
    "db6": (
        -0.0010773010853084796,
        0.004777257510945511,
        0.0005538422011614961,
        -0.03158203931748603,
        0.027522865530305727,
        0.09750160558732304,
        -0.12976686756726194,
        -0.22626469396543983,
        0.31525035170919763,
        0.7511339080210954,
        0.49462389039845306,
        0.11154074335010947,
    ),
    "db7": (
        0.00035371379997452024,
        -0.0018016407040474908,
        0.0004295779729213665,
        0.01255099855609984,
        -0.01657454163066688,
        -0.03802993693501441,
        0.08061260915108308,
        0.07130921926683026,
        -0.22403618499387498,
        -0.14390600392856498,
        0.4697822874051931,
        0.7291320908462351,
        0.3965393194819173,
        0.07785205408500918,
    ),
    "db8": (
        -0.00011747678412476953,
        0.0006754494064505693,
        -0.00039174037337694705,
        -0.004870352993451574,
        0.008746094047405777,
        0.013981027917398282,
        -0.044088253930794755,
        -0.017369301001807547,
        0.12874742662047847,
        0.0004724845739132828,
        -0.2840155429615469,
        -0.015829105256349306,
        0.5853546836542067,
        0.6756307362972898,
        0.31287159091429995,
        0.05441584224310401,
    ),
    "db9": (
        3.93473203162716e-05,
        -0.0002519631889427101,
        0.00023038576352319597,
        0.0018476468830562265,
        -0.00428150368246343,
        -0.004723204757751397,
        0.022361662123679096,
        0.00025094711483145197,
        -0.06763282906132997,
        0.03072568147933338,
        0.14854074933810638,
        -0.09684078322297646,
        -0.2932737832791749,
        0.13319738582500756,
        0.6572880780513005,
        0.6048231236901112,
        0.24383467461259034,
        0.038077947363878345,
    ),
    "db10": (
        -1.3264202894521244e-05,
        9.358867032006959e-05,
        -0.00011646685512928545,
        -0.0006858566949597116,
        0.001992405295185056,
        0.001395351747052901,
        -0.010733175483330575,
        0.0036065535669561697,
        0.033212674059341,
        -0.029457536821875813,
        -0.07139414716639708,
        0.09305736460357235,
        0.12736934033579325,
        -0.19594627437737705,
        -0.24984642432731538,
        0.2811723436605775,
        0.6884590394536035,
        0.5272011889317256,
        0.1881768000776915,
        0.026670057900555554,
    ),
    "db11": (
        4.49427427723651e-06,
        -3.4634984186984996e-05,
        5.4439074699368475e-05,
        0.0002491525235528235,
        -0.0008930232506662646,
        -0.0003085928588151432,
        0.004928417656059041,
        -0.0033408588730144454,
        -0.0153648209062016,
        0.020840904360181062,
        0.031335090219046076,
        -0.0664387856950252,
        -0.046479955116684187,
        0.14981201246637849,
        0.0660435881966832,
        -0.27423084681794696,
        -0.16227524502749036,
        0.41196436894790744,
        0.6856867749162006,
        0.44989976435604534,
        0.1440670211506245,
        0.018694297761471083,
    ),
    "db12": (
        -1.529071758068511e-06,
        1.2776952219379767e-05,
        -2.4241545757030785e-05,
        -8.850410920820432e-05,
        0.00038865306282093143,
        6.545128212509596e-06,
        -0.0021795036186277603,
        0.0022486072409952378,
        0.00671149900879551,
        -0.012840825198300683,
        -0.01221864906974828,
        0.04154627749508444,
        0.010849130255822185,
        -0.09643212009650708,
        0.00535956967435215,
        0.18247860592757967,
        -0.023779257256069726,
        -0.3161784537527855,
        -0.04476388565377463,
        0.5158864784278157,
        0.6571987225793071,
        0.37735513521421266,
        0.10956627282118515,
        0.013112257957229518,
    ),
    "db13": (
        5.220035098454864e-07,
        -4.700416479360868e-06,
        1.0441930571408138e-05,
        3.0678537579325496e-05,
        -0.0001651289885565055,
        4.9251525126289464e-05,
        0.0009323261308672633,
        -0.001315673911892299,
        -0.0027619112346568622,
        0.007255589401617566,
        0.003923941448797416,
        -0.02383142071032365,
        0.0023799722540590786,
        0.05613947710028343,
        -0.026488406475343694,
        -0.10580761818793433,
        0.07294893365677717,
        0.17947607942933985,
        -0.12457673075081525,
        -0.31497290771138864,
        0.08698572617964724,
        0.5888895704312189,
        0.6110558511587877,
        0.31199632216043804,
        0.08286124387290278,
        0.009202133538962367,
    ),
    "db14": (
        -1.7871399683113592e-07,
        1.7249946753678127e-06,
        -4.389704901781394e-06,
        -1.0337209184570774e-05,
        6.87550425269751e-05,
        -4.1777245770372596e-05,
        -0.0003868319473129545,
        0.0007080211542355279,
        0.001061691085606762,
        -0.0038496388680221874,
        -0.000746218989268385,
        0.01278949326633341,
        -0.005615049530356959,
        -0.030185351540390634,
        0.026981408307912916,
        0.05523712625921604,
        -0.07154895550404614,
        -0.08674841156816969,
        0.1399890165844607,
        0.1383952138648066,
        -0.21803352999327605,
        -0.27168855227874805,
        0.21867068775890652,
        0.6311878491048568,
        0.5543056179408938,
        0.2548502677926214,
        0.0623647588493989,
        0.006461153460087948,
    ),
    "db15": (
        6.133359913305752e-08,
        -6.316882325881664e-07,
        1.8112704079405772e-06,
        3.36298718173758e-06,
        -2.8133296266047814e-05,
        2.5792699155318936e-05,
        0.00015589648992059973,
        -0.0003595652443624688,
        -0.000373482354137617,
        0.0019433239803822114,
        -0.00024175649076162427,
        -0.006487734560315745,
        0.005101000360407543,
        0.015083918027835902,
        -0.020810050169693083,
        -0.025767007328439964,
        0.05478055058450761,
        0.033877143923507685,
        -0.1111209360372317,
        -0.039666176555790945,
        0.190146714007123,
        0.06528295284877282,
        -0.28888259656696563,
        -0.19320413960914543,
        0.3390025354547315,
        0.6458131403574243,
        0.4926317717081396,
        0.20602386398699574,
        0.04674339489276627,
        0.004538537361578899,
    ),
    "db16": (
        -2.109339630100743e-08,
        2.3087840868575457e-07,
        -7.363656785451205e-07,
        -1.0435713423116066e-06,
        1.1336608661276258e-05,
        -1.3945668988208893e-05,
        -6.103596621410936e-05,
        0.00017478724522533817,
        0.00011424152003872239,
        -0.0009410217493595676,
        0.00040789698084971285,
        0.003128023381206269,
        -0.00364427962149839,
        -0.006990014563413916,
        0.013993768859828731,
        0.01029765964095597,
        -0.03688839769173014,
        -0.007588974368857738,
        0.07592423604427631,
        -0.006239722752474872,
        -0.1323883055638104,
        0.027340263752716042,
        0.2111906939471043,
        -0.027918208133028276,
        -0.3270633105279177,
        -0.08975108940248964,
        0.4402902568863569,
        0.637356332083789,
        0.4303127228460038,
        0.16506428348885313,
        0.034907714323673344,
        0.003189220925347738,
    ),
    "db17": (
        7.2674929685616085e-09,
        -8.42394844600268e-08,
        2.957700933316857e-07,
        3.0165496099945573e-07,
        -4.505942477222988e-06,
        6.9906009850767515e-06,
        2.3186813798745952e-05,
        -8.204803202453391e-05,
        -2.5610109566548458e-05,
        0.0004394654277686437,
        -0.00032813251940983797,
        -0.0014368453048029762,
        0.0023012052421535457,
        0.0029679966915260947,
        -0.008602921520322855,
        -0.003042989981354637,
        0.02273367658394627,
        -0.0032709555358192938,
        -0.04692243838926974,
        0.022312336178103798,
        0.08110598665416088,
        -0.05709141963167693,
        -0.1268156917782863,
        0.10113548917747027,
        0.197310589565011,
        -0.1265997522158827,
        -0.32832074836396175,
        0.027314970403293636,
        0.5183157640569378,
        0.6109966156846228,
        0.37035072415264114,
        0.1312149033078244,
        0.025985393703606044,
        0.0022418070010373128,
    ),
    "db18": (
        -2.5079344549485983e-09,
        3.068835863045175e-08,
        -1.1760987670282317e-07,
        -7.691632689885177e-08,
        1.7687129836276155e-06,
        -3.332634478885822e-06,
        -8.520602537446696e-06,
        3.7412378807400385e-05,
        -1.5359171235347246e-07,
        -0.00019864855231174796,
        0.0002135815619103407,
        0.0006284656829651457,
        -0.0013405962983361066,
        -0.0011187326669924971,
        0.004943343605466738,
        0.00011863003385811746,
        -0.013051480946612001,
        0.006262167954305707,
        0.02667070592647059,
        -0.023733210395860002,
        -0.044526141902982326,
        0.057051247738536884,
        0.06488721621190545,
        -0.10675224665982849,
        -0.09233188415084628,
        0.1670813127632574,
        0.14953397556537779,
        -0.21648093400514298,
        -0.29365404073655876,
        0.14722311196992816,
        0.5718016548886513,
        0.5718268077666072,
        0.3146789413370317,
        0.10358846582242359,
        0.019288531724146376,
        0.0015763102184407605,
    ),
    "db19": (
        8.666848838997619e-10,
        -1.1164020670358259e-08,
        4.6369377757826045e-08,
        1.4470882987978445e-08,
        -6.862755657769143e-07,
        1.531931476691193e-06,
        3.0109643162965265e-06,
        -1.6640176297154945e-05,
        5.105950487073886e-06,
        8.711270467219923e-05,
        -0.00012460079173415878,
        -0.000260676135678628,
        0.0007358025205054352,
        0.00034180865345859575,
        -0.002687551800701582,
        0.0007689543592575484,
        0.007040747367105243,
        -0.005866922281012175,
        -0.013988388678535142,
        0.019375549889176127,
        0.02162376740958505,
        -0.04567422627723091,
        -0.02650123625012304,
        0.08690675555581223,
        0.027584350625628667,
        -0.1427856950387366,
        -0.03351854190230288,
        0.21234974330627848,
        0.07465226970810326,
        -0.28583863175582624,
        -0.22809139421548263,
        0.26089495265103885,
        0.6017045491275379,
        0.5244363774646549,
        0.26438843174089677,
        0.08127811326545956,
        0.014281098450764397,
        0.0011086697631817106,
    ),
    "db20": (
        -2.9988364896193194e-10,
        4.056127055551833e-09,
        -1.814843248299696e-08,
        2.0143220235505126e-10,
        2.6339242262700013e-07,
        -6.847079597000557e-07,
        -1.0119940100188862e-06,
        7.2412482876736205e-06,
        -4.376143862183997e-06,
        -3.710586183394713e-05,
        6.77428082837773e-05,
        0.00010153288973670291,
        -0.00038510474869921763,
        -5.349759843997695e-05,
        0.0013925596193231364,
        -0.0008315621728225569,
        -0.0035814942596096226,
        0.004420542387045791,
        0.006721627302259457,
        -0.01381052613715192,
        -0.00878932492390156,
        0.03229429953076958,
        0.005874681811811827,
        -0.06172289962468046,
        0.005632246857307436,
        0.10229171917444256,
        -0.024716827338613585,
        -0.15545875070726795,
        0.0398502464577712,
        0.22829105081991632,
        -0.016727088309077008,
        -0.32678680043403496,
        -0.13921208801148388,
        0.36150229873933104,
        0.6104932389385939,
        0.4726961853109017,
        0.21994211355139703,
        0.06342378045908152,
        0.010549394624950399,
        0.0007799536136668463,
    ),
    "sym2": (
        -0.12940952255126037,
        0.2241438680420134,
        0.8365163037378079,
        0.48296291314453416,
    ),
    "sym3": (
        0.03522629188570953,
        -0.08544127388202666,
        -0.13501102001025458,
        0.45987750211849154,
        0.8068915093110925,
        0.33267055295008263,
    ),
    "sym4": (
        0.032223100604051466,
        -0.012603967262031304,
        -0.09921954357663353,
        0.29785779560530606,
        0.8037387518051321,
        0.497618667632775,
        -0.029635527646002493,
        -0.07576571478950221,
    ),
    "sym5": (
        0.027333068344998768,
        0.02951949092570626,
        -0.039134249302313844,
        0.19939753397685558,
        0.7234076904040407,
        0.633978963456792,
        0.01660210576451085,
        -0.17532808990805623,
        -0.021101834024689042,
        0.019538882735249827,
    ),
    "sym6": (
        -0.00780070832503238,
        0.0017677118642540077,
        0.04472490177078139,
        -0.02106029251237085,
        -0.07263752278637658,
        0.3379294217281658,
        0.787641141028651,
        0.49105594192797375,
        -0.04831174258569806,
        -0.11799011114852002,
        0.0034907120842221626,
        0.015404109327044824,
    ),
    "sym7": (
        0.0022918339540537714,
        -0.003283297847466811,
        -0.01812660513133846,
        0.020464207577546033,
        0.04474234946835238,
        -0.1010109208684203,
        -0.05680447688966697,
        0.4836109156822677,
        0.7819215932917282,
        0.3602184609062602,
        -0.06413128980738582,
        -0.06490800354718848,
        0.017213376300804502,
        0.012015419283549189,
    ),
    "sym8": (
        0.001889950332767689,
        -0.0003029205147241331,
        -0.014952258337062199,
        0.0038087520138944896,
        0.04913717967373029,
        -0.027219029917103486,
        -0.0519458381078818,
        0.36444189483617895,
        0.777185751699628,
        0.4813596512590534,
        -0.061273359067811076,
        -0.14329423835127267,
        0.007607487324976609,
        0.03169508781152599,
        -0.0005421323318000107,
        -0.0033824159510050028,
    ),
    "sym9": (
        0.0014009155259146562,
        0.0006197808889855071,
        -0.013271967781817134,
        -0.011528210207679187,
        0.030224878858275187,
        0.0005834627461249819,
        -0.05456895843083335,
        0.23876091460730517,
        0.7178970827644124,
        0.6173384491409342,
        0.03527248803527104,
        -0.19155083129728434,
        -0.018233770779395506,
        0.062077789302885746,
        0.008859267493400267,
        -0.010264064027633121,
        -0.00047315449868004354,
        0.001069490032908612,
    ),
    "sym10": (
        0.0008625782262259724,
        0.0007154205420543397,
        -0.007056764062587304,
        0.0005956827837425191,
        0.04968612664694288,
        0.026240365058448987,
        -0.12155210554854895,
        -0.015019238839137859,
        0.5137098733480263,
        0.7669548365606096,
        0.34021601302346216,
        -0.08787871151197514,
        -0.0670899078083818,
        0.03384235466357522,
        -0.0008687521096892581,
        -0.02300546135349751,
        -0.0011404297952173285,
        0.005071649198531799,
        0.00034014926631480987,
        -0.0004101159158043983,
    ),
    "sym11": (
        0.0006049755444670652,
        0.0007643413858299387,
        -0.005802940653980816,
        -0.005988363304927519,
        0.031753354999600504,
        0.035263653806012166,
        -0.0931755926688397,
        -0.08916610271150285,
        0.3577701168341381,
        0.7665230477033109,
        0.5010675488454238,
        -0.017005487753640736,
        -0.10574469945433015,
        0.03595529973403713,
        0.02814882477537615,
        -0.026418638246881582,
        -0.009140435782169434,
        0.008709770719732784,
        0.0018010896927056514,
        -0.0016696173319946611,
        -0.00017546094584372968,
        0.00013887718657188376,
    ),
    "sym12": (
        -0.00020526600487137938,
        -0.00017690949629193344,
        0.002104447335629671,
        0.0006915974586788278,
        -0.013053840998593582,
        -0.001287033317152989,
        0.06005859623424475,
        0.031256859883591684,
        -0.12359121292129573,
        -0.007517992473075242,
        0.5166743899411825,
        0.7608721850415805,
        0.34345150160951965,
        -0.08927100096836146,
        -0.08017578174217259,
        0.030686743515091555,
        0.0018619254598864197,
        -0.025493025089340912,
        -0.0005948327807239624,
        0.00863423079172048,
        0.0006610376737514791,
        -0.001386550262370246,
        -8.418262000974747e-05,
        9.767610247723154e-05,
    ),
    "sym13": (
        7.042986690696273e-05,
        3.690537342323894e-05,
        -0.0007213643851363755,
        0.0004132611988416782,
        0.005674853760123338,
        -0.0014924472742587286,
        -0.020749686325520652,
        0.017618296880645045,
        0.09292603089914397,
        0.008819757670429852,
        -0.14049009311367552,
        0.11023022302128688,
        0.6445643839011571,
        0.6957391505615691,
        0.19770481877126597,
        -0.12436246075150338,
        -0.059750627717956466,
        0.01386249743583841,
        -0.017211642726304387,
        -0.020216768133395468,
        0.005296359738721862,
        0.00752622538996817,
        -0.00017094285852957213,
        -0.001136063438927969,
        -3.573862364871594e-05,
        6.820325263074355e-05,
    ),
    "sym14": (
        5.166546032083359e-05,
        6.0502701743338275e-05,
        -0.0005625030468108087,
        -0.0002626220148495617,
        0.00412633304909577,
        0.0014943551624894205,
        -0.0173792278244717,
        -0.0008941357568047044,
        0.07164471292189067,
        0.0431084588082756,
        -0.10781516768869394,
        0.020249205065083372,
        0.5326256876026231,
        0.7519483566354735,
        0.3259474096507534,
        -0.11305768039588186,
        -0.10559200315709116,
        0.021778137172461964,
        0.003412995088904644,
        -0.026866052036322755,
        1.5568501514960417e-05,
        0.012053926501371028,
        0.000876139758390644,
        -0.002861055793818449,
        -0.00027100148389039183,
        0.0003777346635249395,
        2.6172354011525585e-05,
        -2.2349526198376276e-05,
    ),
    "sym15": (
        3.729144682523476e-05,
        6.359603718362835e-05,
        -0.00044194831006956356,
        -0.0007073560094912165,
        0.00246812215322244,
        0.002504890754127978,
        -0.013853079649381813,
        -0.01358784439721163,
        0.04540242988906322,
        0.05650312564039918,
        -0.0703562086927054,
        -0.03748575628480675,
        0.4081891068306578,
        0.7606441804971572,
        0.461705109136779,
        -0.06087194751333965,
        -0.15348814997118704,
        0.01332181894255939,
        0.034271569706280085,
        -0.024802448419161426,
        -0.010429501152521885,
        0.015572181007010301,
        0.004720933837865321,
        -0.004923023327123525,
        -0.0013055157937326687,
        0.0009902338846618614,
        0.00019935168362621234,
        -0.00012233420120889748,
        -1.2729928173433851e-05,
        7.46457579106633e-06,
    ),
    "sym16": (
        -1.2552906004588058e-05,
        -1.4963117619171127e-05,
        0.00016355529607213693,
        0.00011797321121147124,
        -0.0012146222998133563,
        -0.0004837833239505696,
        0.006219665992202444,
        0.0016338240562740315,
        -0.022975152888161057,
        -0.0029934480320456796,
        0.077663527045468,
        0.046694175567007015,
        -0.10486312987748436,
        0.029993973110139238,
        0.5367441345860743,
        0.7467880503688457,
        0.3231022390642957,
        -0.11888273199735631,
        -0.11673387364225705,
        0.019521339077629103,
        0.00798660609949865,
        -0.026209649251347587,
        0.0005364340248225064,
        0.014702157960279329,
        0.0008547749494901028,
        -0.0045399165469086605,
        -0.0004449474164188862,
        0.000874569586713091,
        8.65111550232669e-05,
        -0.00010014852036965708,
        -6.387996260198792e-06,
        5.359038046268959e-06,
    ),
    "sym17": (
        4.297343327338256e-06,
        2.780126693825943e-06,
        -6.293702597545909e-05,
        -1.3506383399799107e-05,
        0.00047599638026318304,
        -0.00013864230268101327,
        -0.0027416759756781813,
        0.0008567700701928022,
        0.010482366933016147,
        -0.004819212803181354,
        -0.03329138349230622,
        0.01790395221438949,
        0.10475461484219489,
        0.01727117821060019,
        -0.11856693261099856,
        0.1423983504151139,
        0.6507166292043823,
        0.681488995344317,
        0.18053958458074407,
        -0.1550760053497069,
        -0.08607087472063264,
        0.01615880872591857,
        -0.007261634750933915,
        -0.01803889724190139,
        0.009952982523507613,
        0.012396988366634302,
        -0.0019054076898564055,
        -0.003932325279794941,
        5.840042869518092e-05,
        0.0007198270642145453,
        2.5207933140671322e-05,
        -7.607124405602918e-05,
        -2.4527163425740825e-06,
        3.7912531943316247e-06,
    ),
    "sym18": (
        2.892474805267115e-06,
        2.6408900667347157e-06,
        -4.7259681975149424e-05,
        -3.2556589178982814e-05,
        0.00039101249481451644,
        0.00020846214369669113,
        -0.0020524976444369876,
        -0.0005189405626728703,
        0.008879144967487583,
        0.0017158411271963984,
        -0.029469433167755854,
        -0.007309624756618244,
        0.07846270973778088,
        0.03951013885200937,
        -0.12274641158076044,
        0.011511520008825032,
        0.5229917404709491,
        0.7484529780904768,
        0.3462850811409885,
        -0.09514637794111265,
        -0.10818651326649147,
        0.023656844183041897,
        0.012723564097985932,
        -0.026143466322105048,
        -0.0003355512196306197,
        0.01602405857460199,
        0.0006078810328647664,
        -0.0061111978649319105,
        -0.0005261449543967968,
        0.0015162670758929896,
        0.00014520671649895464,
        -0.0002557039001775321,
        -1.9888301268250266e-05,
        2.7264925036669275e-05,
        1.2478690875888206e-06,
        -1.3667474998628572e-06,
    ),
    "sym19": (
        2.1542702922555063e-06,
        3.546553332692916e-06,
        -3.4985854234752255e-05,
        -5.6859353393006724e-05,
        0.0002646701234949746,
        0.0003795145567024049,
        -0.0014046480158004574,
        -0.0016129439205641665,
        0.005953790325102896,
        0.005366363733201133,
        -0.02168025871581042,
        -0.021414460392216315,
        0.05186597238848078,
        0.06193083871702268,
        -0.07408669569565862,
        -0.03268471806446477,
        0.41470310230068164,
        0.75459001993869,
        0.46026526783232374,
        -0.05748204757736487,
        -0.16282055583466962,
        0.0068637952190007834,
        0.04224406849070847,
        -0.02082645889034479,
        -0.012379246089639955,
        0.018312491803458595,
        0.006194930701782612,
        -0.008339352496655262,
        -0.002596655882875255,
        0.002560656854929445,
        0.000735741398753649,
        -0.0005637583025044806,
        -0.00013378969566908773,
        8.870041253387537e-05,
        1.4653432533472274e-05,
        -8.99363395601438e-06,
        -7.342932487726876e-07,
        4.460291396305223e-07,
    ),
    "sym20": (
        -7.163964719387662e-07,
        -6.765500138281023e-07,
        1.3353493314592728e-05,
        1.1907175097168025e-05,
        -0.00011484311474705872,
        -7.356598100136749e-05,
        0.000685755506350252,
        0.0002792261351250862,
        -0.0031391997584386687,
        -0.0009416991895075304,
        0.01086982812287771,
        0.0014941584257480312,
        -0.03474436329168488,
        -0.010410713624597256,
        0.08049913967662263,
        0.042309230561763306,
        -0.11379033406541955,
        0.02920785003705891,
        0.5332549429885124,
        0.7429693757529555,
        0.3342526198364605,
        -0.10954624288628978,
        -0.12072097415345966,
        0.02279865622431027,
        0.019403652919276565,
        -0.02306357799685385,
        0.0005241179733992942,
        0.017953029354642974,
        0.0005375922140294355,
        -0.007798469076745483,
        -0.0006309502605074259,
        0.002352180068755071,
        0.00025495855324394643,
        -0.0005019959827440907,
        -5.382272398200972e-05,
        7.482671576222636e-05,
        6.331996325673584e-06,
        -7.044465593954158e-06,
        -3.0832915429325706e-07,
        3.264886761020383e-07,
    ),
    "coif1": (
        -0.07273261951252645,
        0.33789766245748176,
        0.8525720202116004,
        0.3848648468648577,
        -0.07273261951252645,
        -0.015655728135791993,
    ),
    "coif2": (
        0.01638733646320364,
        -0.04146493678687178,
        -0.0673725547237256,
        0.38611006682276283,
        0.8127236354494135,
        0.41700518442323903,
        -0.07648859907828076,
        -0.059434418646431085,
        0.02368017194684777,
        0.005611434819368834,
        -0.001823208870911032,
        -0.000720549445520347,
    ),
    "coif3": (
        -0.0037935128643808015,
        0.0077825964256727454,
        0.023452696142077165,
        -0.06577191128146936,
        -0.06112339000297254,
        0.4051769024091182,
        0.7937772226260872,
        0.42848347637737,
        -0.07179982161915484,
        -0.08230192710629981,
        0.03455502757329773,
        0.015880544863669452,
        -0.009007976136730624,
        -0.002574517688136797,
        0.0011175187708306303,
        0.0004662169598204029,
        -7.0983302506379e-05,
        -3.4599773197272774e-05,
    ),
    "coif4": (
        0.000892313902537003,
        -0.0016294924252267858,
        -0.00734616793626805,
        0.016068947131575025,
        0.026682304669604834,
        -0.08126671024919373,
        -0.05607731960356926,
        0.41530842700068227,
        0.7822389344242826,
        0.43438603311435653,
        -0.06662747236681715,
        -0.09622042453595264,
        0.03933442260558915,
        0.025082253337949608,
        -0.015211728187697211,
        -0.0056582838001308835,
        0.003751434697146086,
        0.0012665610789256603,
        -0.0005890202246332164,
        -0.0002599743371222568,
        6.233885431278718e-05,
        3.1229861599195265e-05,
        -3.2596479400307506e-06,
        -1.7849909144933466e-06,
    ),
    "coif5": (
        -0.000212081862067494,
        0.0003585777411617577,
        0.0021782943778456947,
        -0.004159312627578639,
        -0.010131584846900275,
        0.023408322118927783,
        0.028169744270532353,
        -0.09192158806008609,
        -0.05204667025355476,
        0.42157126673075435,
        0.7742936228603274,
        0.4379823066591633,
        -0.06203775157498195,
        -0.10556315130733723,
        0.041287530472117834,
        0.03267479946705735,
        -0.019758391600965465,
        -0.009159507338676163,
        0.006761520220620417,
        0.0024315754425382886,
        -0.0016616273039298788,
        -0.0006375589261258812,
        0.00030185794166824473,
        0.00014035632812373243,
        -4.12198619242655e-05,
        -2.1270221672515614e-05,
        3.7007277113394796e-06,
        2.0612203985788783e-06,
        -1.6237995172048335e-07,
        -9.604010112767892e-08,
    ),
    "coif6": (
        5.0775487836340565e-05,
        -8.11700262678484e-05,
        -0.0006246130439256835,
        0.001091624712325903,
        0.003539019871540998,
        -0.007029406391002729,
        -0.012231577790037912,
        0.02964577289132384,
        0.02878611434666557,
        -0.09967300204601175,
        -0.04876407217567387,
        0.4258195450128385,
        0.7684032575798924,
        0.4404011911268528,
        -0.0581089179726148,
        -0.11226080796481723,
        0.04185249067613627,
        0.03888132625151076,
        -0.022950153279849065,
        -0.01265006790873235,
        0.009591090175904052,
        0.0038576582705936867,
        -0.003073939507208559,
        -0.0011574350134273346,
        0.0007698547307507267,
        0.00032522235901024076,
        -0.0001545771992797995,
        -7.528004306935964e-05,
        2.473655932872323e-05,
        1.313985135402144e-05,
        -2.924385559757523e-06,
        -1.6596192951024209e-06,
        2.255997852816182e-07,
        1.3503244993561446e-07,
        -8.487143396262437e-09,
        -5.309088417196893e-09,
    ),
    "coif7": (
        -1.2222250624065772e-05,
        1.871135500141218e-05,
        0.00017510216778483177,
        -0.0002872023753570612,
        -0.0011693144285797633,
        0.002105772041410548,
        0.004829446560702038,
        -0.00993889526908058,
        -0.0138025542362884,
        0.03491050510474272,
        0.028937041983523145,
        -0.10555616822156129,
        -0.046033397038466296,
        0.4288888072494226,
        0.7638153654167333,
        0.44213746140184257,
        -0.054751241648150456,
        -0.1172935710431928,
        0.04170535760257679,
        0.04399304616307942,
        -0.025154257568539024,
        -0.01594684681956794,
        0.012052338241841622,
        0.005431316442880095,
        -0.004617842130433119,
        -0.0018015372833330425,
        0.0014347418566524122,
        0.0005794994482340953,
        -0.00036906682873489536,
        -0.00016781721215484971,
        7.971050025993867e-05,
        4.04304824171402e-05,
        -1.4235636978451501e-05,
        -7.771243547311862e-06,
        2.0020780498554183e-06,
        1.1579769069489573e-06,
        -2.0693205243938526e-07,
        -1.255091319079457e-07,
        1.3935103885216451e-08,
        8.796593384856987e-09,
        -4.5783340677929505e-10,
        -2.990566231736866e-10,
    ),
    "coif8": (
        2.9543365214148865e-06,
        -4.368264820320075e-06,
        -4.829631521409294e-05,
        7.54736783816504e-05,
        0.0003712949956074124,
        -0.0006235604474579403,
        -0.001783260008597197,
        0.0033008250106161103,
        0.005994849192155886,
        -0.012742370632719796,
        -0.014978462081708433,
        0.03937203787797985,
        0.028828621759288006,
        -0.11016997698347016,
        -0.04371898336594559,
        0.4312098155550876,
        0.7601133020179405,
        0.44344254984152603,
        -0.051860743161188674,
        -0.12121116823149647,
        0.04118580667625654,
        0.048252371085682255,
        -0.026656710542648603,
        -0.018985244695254866,
        0.014117470077618781,
        0.007065827011035096,
        -0.0061566595482584205,
        -0.0025440037102452736,
        0.002235649422048103,
        0.0008967760630796798,
        -0.0006871716433480045,
        -0.00029777893219563997,
        0.00018169287648431021,
        8.754452091843062e-05,
        -4.147478606916181e-05,
        -2.1802000767010352e-05,
        8.031502995440787e-06,
        4.496936443579391e-06,
        -1.2754542996407563e-06,
        -7.515021558886325e-07,
        1.5893517221530649e-07,
        9.772418508367798e-08,
        -1.4540008533753526e-08,
        -9.271205591546297e-09,
        8.669995082338711e-10,
        5.704810333909736e-10,
        -2.525423493885457e-11,
        -1.7079895947055483e-11,
    ),
    "coif9": (
        1.1651261634843108e-08,
        1.1079372901717914e-07,
        -5.3946767609667126e-08,
        -2.6073340698249366e-06,
        -1.6187793342181689e-06,
        3.0290553569821916e-05,
        2.508182992284691e-05,
        -0.00023017683382219658,
        -0.00018292408554318592,
        0.001285350265455426,
        0.0008650990310835029,
        -0.005668607344932196,
        -0.0029521824056741373,
        0.02111157360049533,
        0.007668205580848188,
        -0.07409303408041895,
        -0.01564126553721227,
        0.37534878883618794,
        0.7326525597642327,
        0.5121777221874976,
        -0.033814889203543,
        -0.18888305837996575,
        0.03653524973880192,
        0.10161154349924867,
        -0.03232586131898369,
        -0.05251988883176474,
        0.023428715577231952,
        0.023674362394228966,
        -0.013883363324440142,
        -0.008899554162352311,
        0.006707996373823011,
        0.0027189588554737327,
        -0.002639841703890719,
        -0.0006736798797928129,
        0.0008509542249409703,
        0.00014333074241198424,
        -0.0002292108086656547,
        -3.0286733229478335e-05,
        5.352756708581016e-05,
        6.876513210017801e-06,
        -1.1198406367267063e-05,
        -1.4454259076250178e-06,
        2.076548538714729e-06,
        2.392145572014981e-07,
        -3.24309009767869e-07,
        -2.9720597614059022e-08,
        4.0859747706663864e-08,
        2.537212168904728e-09,
        -3.986566702834324e-09,
        -7.321204309910554e-11,
        2.6516545148422684e-10,
        -7.730935054645415e-12,
        -1.0138584994556272e-11,
        1.0661912675613007e-12,
    ),
    "coif10": (
        2.0166880432849638e-07,
        -1.9686940132053446e-07,
        -4.4029349113768246e-06,
        4.713787002008344e-06,
        4.534309395270758e-05,
        -5.323948255921995e-05,
        -0.00029287641941416764,
        0.0003790357722833557,
        0.0013301886210071291,
        -0.0019186116612175232,
        -0.0045118296153962385,
        0.007397887830625292,
        0.011840369193694283,
        -0.02284992579214014,
        -0.024553778874202802,
        0.059532880903335986,
        0.04068352114654519,
        -0.1435599518143541,
        -0.053965185671873334,
        0.47796957243973276,
        0.7638648579809212,
        0.38752798196348676,
        -0.04587616152125383,
        -0.06400633410190235,
        0.025939266069505494,
        -0.001633564896626448,
        -0.006282363442003756,
        0.017875510859530316,
        -0.00584652542626357,
        -0.015928147814544085,
        0.009300299903794574,
        0.009630857584302408,
        -0.00749276767272626,
        -0.0047093246580886755,
        0.004377604726367175,
        0.002064145640674596,
        -0.0020402652304757586,
        -0.0008786039806344471,
        0.0007997519240989777,
        0.0003678643382385406,
        -0.00027353166437941155,
        -0.0001435181415178596,
        8.293447354534834e-05,
        4.921721655793331e-05,
        -2.2075422950649907e-05,
        -1.4393800304584653e-05,
        5.03258841694356e-06,
        3.5445514878364457e-06,
        -9.58459216129261e-07,
        -7.243173119101472e-07,
        1.486554178343968e-07,
        1.1965422434773165e-07,
        -1.8007792614142136e-08,
        -1.539088526685877e-08,
        1.5943004295387412e-09,
        1.4526440910444335e-09,
        -9.348164291855014e-11,
        -8.879314904598571e-11,
        2.5175558945330677e-12,
        2.7025801751598584e-12,
    ),
    "coif11": (
        -7.496247052169475e-09,
        2.4059175972440124e-09,
        2.0895077674806213e-07,
        -1.263761070280358e-07,
        -2.7065518058900246e-06,
        2.27395265348368e-06,
        2.185515060128726e-05,
        -2.3112691624573678e-05,
        -0.00012414539925105817,
        0.00015894378313537267,
        0.0005297825802287857,
        -0.0008125325659877503,
        -0.0017691932814498823,
        0.0032827589178543396,
        0.004751207106221573,
        -0.011019282794016809,
        -0.010457802876409647,
        0.03252358431974937,
        0.01912356000817043,
        -0.0937004781959339,
        -0.02933589671213799,
        0.40264557916873095,
        0.7451173071368583,
        0.4813796882426801,
        -0.041793279355376585,
        -0.1609041693659808,
        0.03911135416915,
        0.08149017550658601,
        -0.03120740337558696,
        -0.04150442987251639,
        0.021253410608058465,
        0.019556304532535977,
        -0.012367381152325305,
        -0.008331471191514965,
        0.006162229583306392,
        0.003226712921636147,
        -0.002641701035971948,
        -0.0011663616734648875,
        0.000983340230631165,
        0.00040703707386438836,
        -0.0003224426355457752,
        -0.0001391611293694924,
        9.473225590042716e-05,
        4.568906106555782e-05,
        -2.5235299572678e-05,
        -1.387626204610748e-05,
        6.086958284811361e-06,
        3.781084744864986e-06,
        -1.3098578681559102e-06,
        -9.079397173714335e-07,
        2.463139280322813e-07,
        1.8971132257651148e-07,
        -3.962601197890368e-08,
        -3.397699525274721e-08,
        5.321258141234867e-09,
        5.11126387837747e-09,
        -5.765368097071259e-10,
        -6.284923233466115e-10,
        4.8005344471449314e-11,
        6.070188181328903e-11,
        -2.835403712849566e-12,
        -4.325267345032093e-12,
        1.0229035707593534e-13,
        2.0259817978192185e-13,
        -1.5116346887014295e-15,
        -4.709881623591593e-15,
    ),
    "coif12": (
        1.085583702510932e-08,
        -2.051244382686162e-08,
        -2.6506724645284424e-07,
        4.992507314335351e-07,
        3.12315500700863e-06,
        -5.897305827698704e-06,
        -2.35959549308042e-05,
        4.5044319495434596e-05,
        0.00012810250841924057,
        -0.0002501144601071761,
        -0.0005307579153441617,
        0.0010766739917375866,
        0.00173969958068196,
        -0.0037466221822343776,
        -0.004614634900694444,
        0.010881694244893674,
        0.010047491486509155,
        -0.02720835339228939,
        -0.018100367576543156,
        0.06113901477407306,
        0.02704352627853175,
        -0.1357362195894168,
        -0.033387551414665,
        0.45354994410149513,
        0.7407742972078643,
        0.431968558360063,
        -0.02711252092119076,
        -0.12569735176645244,
        0.016908144796097334,
        0.06984514431743462,
        -0.008477476995363855,
        -0.05497817411306086,
        0.005833175521118873,
        0.05150959051844961,
        -0.008955906226815408,
        -0.04759023015411539,
        0.014282194997404385,
        0.03929444704704495,
        -0.017633903742597816,
        -0.027965332405156744,
        0.017010168201656257,
        0.016972586788307573,
        -0.013217219229296952,
        -0.008814951371703995,
        0.0084569527347173,
        0.004007909971518039,
        -0.004535921346951263,
        -0.0016830963448941586,
        0.0020813575214758463,
        0.000702563142622967,
        -0.000839828299896525,
        -0.00030024789706775066,
        0.0003072397524573655,
        0.00012455721407448003,
        -0.00010360460379106073,
        -4.6486496600530454e-05,
        3.175993268095929e-05,
        1.4973558800309782e-05,
        -8.535805492864046e-06,
        -4.134739163944082e-06,
        1.944838274270604e-06,
        9.794760087964535e-07,
        -3.6932278604393165e-07,
        -1.943534011057787e-07,
        5.749751058183588e-08,
        3.0393635856000935e-08,
        -6.860926018673218e-09,
        -3.4496624439439438e-09,
        5.206122132708574e-10,
        2.608974762422273e-10,
        -1.5773428894981637e-11,
        -1.1135388117080693e-11,
    ),
    "coif13": (
        -4.6272051733420806e-09,
        -7.90506549467241e-09,
        1.2634193786936988e-07,
        1.7292495467039438e-07,
        -1.6261606890687717e-06,
        -1.781293058828127e-06,
        1.3178383214397894e-05,
        1.1377932152909277e-05,
        -7.570620131994887e-05,
        -4.949987050203353e-05,
        0.00032886768951807067,
        0.00014802596944192664,
        -0.0011245530741259382,
        -0.00026334149274106984,
        0.003108638289134976,
        -5.548806458349963e-05,
        -0.007070359633001338,
        0.0024390953549294535,
        0.013365777985646303,
        -0.011046871600097277,
        -0.02103953811079889,
        0.03517333590391985,
        0.02728611169949888,
        -0.10076454551074072,
        -0.02810195812674483,
        0.41421402469791335,
        0.7274987797818275,
        0.4688522200387874,
        -0.004541843207112078,
        -0.15506133717453813,
        -0.014497228851415335,
        0.09173185845140627,
        0.0290703834051082,
        -0.07438568146804651,
        -0.032978418302808496,
        0.07462172213822979,
        0.025161816396257766,
        -0.07737398488572568,
        -0.010173120511780603,
        0.07372893003228446,
        -0.004839644369588479,
        -0.061736478346616455,
        0.01427773828240886,
        0.044870785278865996,
        -0.016522474232659613,
        -0.028315534727731587,
        0.013536358465605776,
        0.01566906974094317,
        -0.00864789079179019,
        -0.00780038634629673,
        0.00441470227090879,
        0.003661213348798776,
        -0.0017966207037571815,
        -0.0017085479510372582,
        0.000568827363346107,
        0.0008046210769210756,
        -0.00012954376879756042,
        -0.0003670056370297675,
        1.3437543716042213e-05,
        0.0001532642025855348,
        5.742368231172078e-06,
        -5.663419601928412e-05,
        -4.759396461546459e-06,
        1.8328138921841175e-05,
        2.1481064790736967e-06,
        -5.178025632193534e-06,
        -7.134031416032564e-07,
        1.2588308824349577e-06,
        1.8096865396132516e-07,
        -2.5491171714718625e-07,
        -3.555228482189542e-08,
        4.118095224658579e-08,
        5.437888413163139e-09,
        -5.070241038744256e-09,
        -6.030326861819034e-10,
        4.424502462591468e-10,
        3.568147645094846e-11,
        -2.1372400888128517e-11,
    ),
    "coif14": (
        1.096065971414606e-09,
        -3.751139391063308e-10,
        -3.168178903743476e-08,
        8.884786290786162e-09,
        4.3746040912424364e-07,
        -1.1226146939228636e-07,
        -3.844799219496043e-06,
        1.0263695869469668e-06,
        2.4177931258608875e-05,
        -7.4830575751476755e-06,
        -0.0001159217641869847,
        4.4562379260361246e-05,
        0.00044083128473566135,
        -0.00021803529923636867,
        -0.001365306477964006,
        0.0008837393111132243,
        0.003507463132948555,
        -0.003008090573868807,
        -0.007568574911767373,
        0.008759558395093606,
        0.013824970133258684,
        -0.022379597939442678,
        -0.021435938446336598,
        0.05226382645977321,
        0.02809678700955933,
        -0.12253365228333056,
        -0.03061723488342838,
        0.43788713326520895,
        0.7335693124504579,
        0.44618434889377967,
        -0.015475612336347111,
        -0.13457502002641508,
        0.0006204313609355471,
        0.07257169437279452,
        0.012948559573629585,
        -0.055479342751276445,
        -0.020174494394442216,
        0.05686497928499218,
        0.018546629118646633,
        -0.0638630157257577,
        -0.009318598464998286,
        0.06766999344642116,
        -0.003231834677626289,
        -0.06396467571446206,
        0.01405672038942891,
        0.053130992642468844,
        -0.019743754165357886,
        -0.0386872163340833,
        0.019713831230147874,
        0.02475286861320718,
        -0.015747344414316553,
        -0.01403138177317636,
        0.010465654198795575,
        0.007188463187465913,
        -0.005888914772995373,
        -0.003455326168396438,
        0.002839763483594843,
        0.001633941664865775,
        -0.0011918804832748897,
        -0.0007791767964362961,
        0.0004459994223211562,
        0.00036597090139343826,
        -0.0001532256685657509,
        -0.00016105614177697796,
        4.9145306866988964e-05,
        6.3844364882463e-05,
        -1.4492143605983116e-05,
        -2.240687221979304e-05,
        3.7735934197095346e-06,
        6.935562446914084e-06,
        -8.383134569072206e-07,
        -1.8828863084766073e-06,
        1.5882895476851963e-07,
        4.3965779474729265e-07,
        -2.644275275368282e-08,
        -8.514820492395216e-08,
        3.801440782623537e-09,
        1.303357732124599e-08,
        -3.975749520610746e-10,
        -1.4860067602007768e-09,
        1.9384233696133573e-11,
        1.1486287217833539e-10,
        2.9449649045091756e-13,
        -4.670001065294393e-12,
    ),
    "coif15": (
        -4.207798077578068e-12,
        7.313128467019983e-11,
        7.765604229004536e-10,
        -2.468680087729698e-09,
        -1.896446758642548e-08,
        3.985588714878307e-08,
        2.3478143472159796e-07,
        -4.1219709258195874e-07,
        -1.8945005943902104e-06,
        3.082051492000716e-06,
        1.1128787254967638e-05,
        -1.7819222849365067e-05,
        -5.066764618958728e-05,
        8.320962792819506e-05,
        0.00018619039609008944,
        -0.0003238632528292747,
        -0.0005681806772186952,
        0.001077240426401499,
        0.001470345743027306,
        -0.0031304169618664415,
        -0.003278143748504032,
        0.008126425904923086,
        0.006373100799664327,
        -0.019364595247439175,
        -0.010904697478227586,
        0.044216439812917264,
        0.016542654063595126,
        -0.10655350195843251,
        -0.02239071126673918,
        0.4125848726459752,
        0.7343153922451997,
        0.4786429490740824,
        -0.02989291803515754,
        -0.16751164132872876,
        0.029943683329021108,
        0.09608959188425617,
        -0.02761692803534199,
        -0.05996693699401416,
        0.023692999793825605,
        0.037150931672293004,
        -0.019065670144425596,
        -0.021750537128325524,
        0.014426521374432006,
        0.01134749685477143,
        -0.0101756233973911,
        -0.004620625517738115,
        0.0065108831873957815,
        0.0006901929954367019,
        -0.0035592259924359946,
        0.0011576399726160574,
        0.001426832760335149,
        -0.0016076127053575172,
        -0.00014334673786121023,
        0.0013178192950038235,
        -0.0004104089534923234,
        -0.0008168446795303627,
        0.00048472963946527667,
        0.0004071304136472403,
        -0.0003510609388618996,
        -0.00017090061384800645,
        0.00019524084774610135,
        6.609509667887523e-05,
        -9.030402950142478e-05,
        -2.7099271710719183e-05,
        3.693989081614403e-05,
        1.2450014615935684e-05,
        -1.4114440730514003e-05,
        -5.774323202279489e-06,
        5.155810120955772e-06,
        2.429216420826623e-06,
        -1.7630595640573723e-06,
        -8.983622021497734e-07,
        5.443653010386554e-07,
        2.946355109271019e-07,
        -1.4901264858167008e-07,
        -8.60213805763109e-08,
        3.615816595238639e-08,
        2.1892276473977572e-08,
        -7.707499370902687e-09,
        -4.69675186451386e-09,
        1.3871581869048593e-09,
        8.279067005678624e-10,
        -1.9929554630765732e-10,
        -1.1743745426346884e-10,
        2.2032558539980263e-11,
        1.2632321427462416e-11,
        -1.8312840636266024e-12,
        -8.631008800609004e-13,
        9.240011696190483e-14,
        2.3177821574376135e-14,
    ),
    "coif16": (
        -6.43140905321542e-12,
        -5.208128870507782e-10,
        -8.848544797330564e-10,
        1.4095040195750352e-08,
        2.5604133602058305e-08,
        -1.894557423613327e-07,
        -3.331731946146252e-07,
        1.6958575184329327e-06,
        2.7291501485747234e-06,
        -1.1392656680340502e-05,
        -1.5941602672714514e-05,
        6.109394865718852e-05,
        7.075000251982876e-05,
        -0.00027064806886870584,
        -0.00024708352791908805,
        0.0010105435235854556,
        0.0006904474939092033,
        -0.003221624103473562,
        -0.0015416908186651219,
        0.008856624399222832,
        0.0026651586866574075,
        -0.021189988231300902,
        -0.0031485896128903386,
        0.04457866989634184,
        0.0008485357990294525,
        -0.08363847585620379,
        0.007391116106792179,
        0.14360695818809904,
        -0.02428349672350424,
        -0.24176426981018953,
        0.04969644056283623,
        0.5747811457205171,
        0.6282741423698281,
        0.30680599342437287,
        0.10289709729084415,
        -0.006624465674494293,
        -0.11272417811148906,
        -0.036795392799858696,
        0.10336763395012723,
        0.03580864868839375,
        -0.07645314675927753,
        -0.0204100958388703,
        0.038703683766485295,
        0.001609095323806483,
        0.0018163630443757274,
        0.015814854256745194,
        -0.03865845660825505,
        -0.02916158263625014,
        0.06758557942341162,
        0.03628351763927193,
        -0.08584611573714737,
        -0.03616767588190825,
        0.09195452136643312,
        0.029958653541961165,
        -0.08638923543916309,
        -0.02073156076475724,
        0.07209105807629457,
        0.01191918458145428,
        -0.05372065815713936,
        -0.005668616431621479,
        0.03590830260074528,
        0.002302550586235291,
        -0.021668881244653153,
        -0.0009497054920504387,
        0.011913706488172261,
        0.0005387256976894367,
        -0.006031561821517216,
        -0.00039325656877272887,
        0.0028357049285030493,
        0.00027397318543236787,
        -0.0012407777722253672,
        -0.00016235826995746573,
        0.0005025667284916142,
        8.145303509831425e-05,
        -0.0001865660357577219,
        -3.5250722753776474e-05,
        6.284322784714406e-05,
        1.3345665489950893e-05,
        -1.9054479178106256e-05,
        -4.4241556084172855e-06,
        5.160216570694331e-06,
        1.2704812349794232e-06,
        -1.23417673690916e-06,
        -3.107933593103659e-07,
        2.5632925577203847e-07,
        6.344986705512157e-08,
        -4.52244198642951e-08,
        -1.0473768350213527e-08,
        6.585383868260808e-09,
        1.3124966960592213e-09,
        -7.531729643506141e-10,
        -1.0878540943702069e-10,
        6.055625914757246e-11,
        4.044679633514626e-12,
        -2.539980384788261e-12,
        5.950808652844894e-14,
    ),
    "coif17": (
        -1.724323502682889e-11,
        -4.905739601029948e-11,
        2.9583416457458576e-10,
        1.0349097857450756e-09,
        -2.0605344000816083e-09,
        -9.97731544221864e-09,
        5.908073882690912e-09,
        5.645849296012808e-08,
        1.1118278936970439e-08,
        -1.880062628343043e-07,
        -1.757562357864993e-07,
        1.7331160192918992e-07,
        8.006273260013021e-07,
        2.157135997580417e-06,
        -1.9962406079607692e-06,
        -1.6979690802064997e-05,
        1.4705088538466333e-06,
        8.010162030907075e-05,
        1.2022716905396387e-05,
        -0.0002967881998443144,
        -7.303408951525588e-05,
        0.0009386238052898714,
        0.0002629558099483793,
        -0.0026395081026528407,
        -0.0007333322505142357,
        0.006781204329827964,
        0.001699741261906062,
        -0.016340910110769342,
        -0.0033694034499303755,
        0.03844895205285749,
        0.005801983828084043,
        -0.09701256973209545,
        -0.00877341089484955,
        0.3986887069537318,
        0.7188527743473538,
        0.4966754326890314,
        -0.01399455452269893,
        -0.18860908511757266,
        0.014844738160683015,
        0.11868681483122595,
        -0.01392211785188639,
        -0.0826110679756899,
        0.011301065763827552,
        0.05900133247183881,
        -0.007477629300478781,
        -0.042706415363778095,
        0.003190673037501411,
        0.03181176991358411,
        0.000785357893915346,
        -0.025094448874614164,
        -0.003782742459730507,
        0.02139402263871309,
        0.005344411772982351,
        -0.019500838045032245,
        -0.005335877613275227,
        0.018260538346947602,
        0.0040115930901611875,
        -0.0167818423176557,
        -0.0019459578105059828,
        0.01461148257848843,
        -0.00016803341167905038,
        -0.01176792680386482,
        0.0017565066832038085,
        0.008618201270745548,
        -0.00253413658894217,
        -0.005656661085129114,
        0.0025420101403555552,
        0.00328022302974061,
        -0.0020503547552649447,
        -0.0016542888683317625,
        0.001389550232038093,
        0.000712901033361366,
        -0.0008056889525843,
        -0.0002581800314516382,
        0.0004042850353800397,
        7.85604836321625e-05,
        -0.00017824515316018823,
        -2.1523625609172723e-05,
        7.092872888689265e-05,
        6.497508832496502e-06,
        -2.6474242009322414e-05,
        -2.4142085223633012e-06,
        9.553119606053131e-06,
        8.764032685439816e-07,
        -3.3108326110397914e-06,
        -2.405208680653146e-07,
        1.0590998332900182e-06,
        3.990482458422549e-08,
        -3.008760920250238e-07,
        -4.962554586631208e-10,
        7.473842702683037e-08,
        -2.1313089576294353e-09,
        -1.620145542504554e-08,
        9.55566673323196e-10,
        2.993694486306307e-09,
        -3.0033568080367473e-10,
        -4.353069170148435e-10,
        6.706050716541623e-11,
        4.263557400963371e-11,
        -9.059586056681184e-12,
        -2.0368235839748873e-12,
        5.461480895189652e-13,
    ),
}

# structurally vanishing wavelet moments, verified in high precision
WAVELET_MOMENTS: dict[str, int] = {
    "haar": 1,
    "db1": 1,
    "db2": 2,
    "db3": 3,
    "db4": 4,
    "db5": 5,
    "db6": 6,
    "db7": 7,
    "db8": 8,
    "db9": 9,
    "db10": 10,
    "db11": 11,
    "db12": 12,
    "db13": 13,
    "db14": 14,
    "db15": 15,
    "db16": 16,
    "db17": 17,
    "db18": 18,
    "db19": 19,
    "db20": 20,
    "sym2": 2,
    "sym3": 3,
    "sym4": 4,
    "sym5": 5,
    "sym6": 6,
    "sym7": 7,
    "sym8": 8,
    "sym9": 9,
    "sym10": 10,
    "sym11": 11,
    "sym12": 12,
    "sym13": 13,
    "sym14": 14,
    "sym15": 15,
    "sym16": 16,
    "sym17": 17,
    "sym18": 18,
    "sym19": 19,
    "sym20": 20,
    "coif1": 2,
    "coif2": 4,
    "coif3": 6,
    "coif4": 8,
    "coif5": 10,
    "coif6": 12,
    "coif7": 14,
    "coif8": 16,
    "coif9": 18,
    "coif10": 20,
    "coif11": 22,
    "coif12": 24,
    "coif13": 26,
    "coif14": 28,
    "coif15": 30,
    "coif16": 32,
    "coif17": 34,
}
