// Generated by scripts/generate_family_tables.py -- do not edit by hand.
// Regenerate with: python3 scripts/generate_family_tables.py

#include "gs/detail/family_tables.hpp"

namespace gs::detail {
namespace {

constexpr double kFilterP1[] = {
    0.50000000000000000, 0.50000000000000000,
};

constexpr double kFilterP2[] = {
    0.34150635094610966, 0.59150635094610966, 0.15849364905389034, -0.091506350946109662,
};
constexpr double kLeftHP2[] = {
    0.60333251192805265, 0.69089553183910355, 0.037517460452446568, 0.45732765985176864,
};
constexpr double kLefthP2[] = {
    -0.39831299769822784, 0.0, 0.0, 0.85008810254916467,
    0.22382035698311438, -0.12922274335431922,
};
constexpr double kLeftSeedP2[] = {
    1.9513272045580575, -1.1265992868286344, 0.0, 0.0,
    0.29309431803416526, 1.4058555664751902, -0.36549711243747196, 0.0,
};
constexpr double kRightHP2[] = {
    0.87050875334986584, 0.43489699796570297, -0.19423340742741207, 0.19015141842995545,
};
constexpr double kRighthP2[] = {
    0.23038904379696919, 0.0, 0.0, 0.37495533164568654,
    0.76755666929811419, 0.44314904963755879,
};
constexpr double kRightSeedP2[] = {
    1.1286711992606008, 0.65163862071968563, 0.0, 0.0,
    -0.42407075869873943, 0.14297051967260300, 1.2534147923003671, 0.0,
};

constexpr double kFilterP3[] = {
    0.23523360389208184, 0.57055845791572181, 0.32518250026311626, -0.095467207784163681,
    -0.060416104155198105, 0.024908749868441868,
};
constexpr double kLeftHP3[] = {
    0.38889976376141771, -0.088207828200478927, -0.84784130847131136, -0.62114831785195190,
    0.52252739320468663, -0.20000800300190628, -0.0095878637787041341, 0.00037122551684227382,
    0.32600971011035383,
};
constexpr double kLefthP3[] = {
    0.34948743674146993, 0.0, 0.0, 0.0,
    0.0, 0.33786734863590495, -0.39977077041186101, 0.16482012973434327,
    0.0, 0.0, 0.80164816441368505, 0.47205526202744880,
    -0.14004208096395094, -0.085425100099475403, 0.035219623651972370,
};
constexpr double kLeftSeedP3[] = {
    -0.74040252813476575, 1.0711988184052005, 0.042009831762984555, 0.0,
    0.0, 0.0, 2.4688192510922467, 1.1070594376205992,
    0.56229315466741676, 0.019812059586036170, 0.0, 0.0,
    0.021032350789278648, 1.2725292457923937, -0.40238077953659627, 0.094641685773959677,
    0.0042335440671920044, 0.0,
};
constexpr double kRightHP3[] = {
    0.90968499431112454, 0.38236065586230591, 0.15098721532840246, -0.29040785109069343,
    0.41899922899653481, 0.49696437212036873, 0.081835418401880546, -0.15875821558265997,
    -0.091247356231201185,
};
constexpr double kRighthP3[] = {
    0.058961010685801576, 0.0, 0.0, 0.0,
    0.0, 0.49075783067459099, 0.46436276736551111, 0.19145054422596027,
    0.0, 0.0, 0.00060425581864081941, 0.077029336094350921,
    0.52006017781249119, 0.76425919927340910, 0.31509382300545318,
};
constexpr double kRightSeedP3[] = {
    1.1796377840235024, 0.61556849057606233, 0.22798415760384476, 0.0,
    0.0, 0.0, -0.73005957662467613, 0.19453009834569219,
    0.65221260849729579, 0.74028057763032875, 0.0, 0.0,
    0.26609633158453204, -0.10145466281347375, -0.14405997976912507, -0.038791294796508598,
    1.2183712417496289, 0.0,
};

constexpr double kFilterP4[] = {
    0.16290171402564917, 0.50547285754591443, 0.44610006912337981, -0.019787513117822322,
    -0.13225358368451987, 0.021808150237088626, 0.023251800535490882, -0.0074934946651807362,
};
constexpr double kLeftHP4[] = {
    0.095219635033176753, 0.069207274227182093, -0.098513633051578512, 0.94051595490018253,
    -0.32528476526979587, 0.38374392709573947, -0.17316299645437739, -0.17574581356503993,
    0.33323378895474004, -0.50143588015359097, 0.61769712544232553, -0.023553818831349534,
    0.0057678811010398857, 0.00084241532370098424, -0.0029027353800344162, 0.22916452715353485,
};
constexpr double kLefthP4[] = {
    -0.30309796597695769, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, -0.50362743516705524,
    0.62588485901010972, -0.20170759872341386, 0.0, 0.0,
    0.0, 0.0, -0.28366056758438924, 0.35177128001603340,
    -0.20135129710813386, 0.098288886497348339, -0.031676138176491777, 0.0,
    0.0, 0.71404758259334482, 0.63183748557350261, -0.027175124100220996,
    -0.18828283082948215, 0.031244331076183654, 0.032882181896984682, -0.010597134370237507,
};
constexpr double kLeftSeedP4[] = {
    -0.54485085867985639, -0.46814074036196042, -0.032108802725663916, 0.00053854302850605345,
    0.0, 0.0, 0.0, 0.0,
    -0.82118825466085310, -0.80095976417267909, -0.34160814663850058, -0.020863680258263377,
    0.00035839310481367356, 0.0, 0.0, 0.0,
    2.5810268980299220, -0.45715998518427380, -0.32205467910005600, -0.066473218362170087,
    -0.0030591959425488460, 5.6282012087936501e-5, 0.0, 0.0,
    -0.023698374726633932, 1.0071023150053425, -0.032728779961078734, 0.040274828269938498,
    -0.011721946152497539, -0.0011986447080087447, 1.8828938092138694e-5, 0.0,
};
constexpr double kRightHP4[] = {
    0.92198178623232891, 0.36289523690598383, 0.12682926311211425, 0.044475777865860271,
    -0.31372631888953392, 0.54012953092323944, 0.55949946058824235, 0.40730904828608046,
    0.13077851497328128, -0.33497850979234724, -0.074721124139687102, 0.14096954042284364,
    -0.037062158331595773, 0.10665248477800276, -0.0046767032909122365, -0.061564978291104646,
};
constexpr double kRighthP4[] = {
    0.013887983599456509, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.29977186474808938,
    0.19279961534849579, 0.062134667242549110, 0.0, 0.0,
    0.0, 0.0, 0.30197270550065091, 0.41797004990096198,
    0.56717646435668670, 0.48312780252265263, 0.15570044157561233, 0.0,
    0.0, -0.086531687653349155, -0.050628035748633691, -0.093991236577896669,
    0.099318898202709611, 0.65201914812715825, 0.69262899280864607, 0.22321762371214674,
};
constexpr double kRightSeedP4[] = {
    1.2027589925157571, 0.60138604729360527, 0.24082316204964491, 0.060715743116127511,
    0.0, 0.0, 0.0, 0.0,
    -0.88025165308152225, 0.23157303253999683, 0.62847021427931505, 0.55754234173599891,
    0.27164148545310130, 0.0, 0.0, 0.0,
    0.54526125580254087, -0.22182118893741800, -0.21179631398510135, 0.19326269331918883,
    0.59266941440238765, 0.68069406520198148, 0.0, 0.0,
    -0.18344357473429030, 0.079647810246578734, 0.045023263593860008, -0.082247285873834361,
    -0.074066206526277579, 0.14535006038799658, 0.97586692864682599, 0.0,
};

constexpr double kFilterP5[] = {
    0.11320949129177918, 0.42697177135251417, 0.51216347212959854, 0.097883480673904674,
    -0.17132835769146744, -0.022800565941773649, 0.054851329321066824, -0.0044134000541791273,
    -0.0088959350509770957, 0.0023587139695339358,
};
constexpr double kLeftHP5[] = {
    0.071410222632867375, 0.092979169124528843, -0.44910957949139099, 0.26323971416349606,
    -0.81748423326555254, -0.11597824859350256, 0.11257582194380191, 0.065674357159209932,
    -0.067402818295358573, 0.13169003711100360, 0.24966204363672653, -0.31559247332065450,
    0.59555872469898947, -0.22657846742331737, -0.42493178930342580, 0.31669920449410443,
    -0.17741306778115673, -0.38154638709025014, 0.43080020231670047, 0.31485056772630473,
    -0.0035880160613623317, 0.0012566889056964173, -0.00012710738680542670, -0.00018836372743957039,
    0.15967441695657659,
};
constexpr double kLefthP5[] = {
    0.21674967375028529, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.70453364052646398, -0.64935786540954990, 0.17217408395984322,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, -0.040343104435769997, -0.046367006069011056,
    0.37387776809642998, -0.31752950873603097, 0.084191406940708394, 0.0,
    0.0, 0.0, 0.0, -0.15452999360018794,
    -0.15103194827909427, 0.46541682163414239, -0.39199736620783503, 0.14085157646567331,
    -0.032417720861939769, 0.0085954012275652243, 0.0, 0.0,
    0.60282994138478249, 0.72443663363982212, 0.14006271570006063, -0.24376170615982245,
    -0.031852797540040805, 0.077568801780340245, -0.0062409284463288520, -0.012580618500663206,
    0.0033356898890164551,
};
constexpr double kLeftSeedP5[] = {
    1.3154770995349058, -0.42539777678403203, -0.099828520629268086, 0.0024977737209448298,
    1.1314869443112988e-5, 0.0, 0.0, 0.0,
    0.0, 0.0, -0.59975393909882985, 0.71950314202447254,
    -0.41428403052550589, -0.077387456692803460, 0.0019927509653136014, 8.9879133277848168e-6,
    0.0, 0.0, 0.0, 0.0,
    -0.47766769224991085, -0.022179372727520007, 0.31598282592672871, -0.21665194704479200,
    -0.037505734566754546, 0.00097596838813923442, 4.3949998229921592e-6, 0.0,
    0.0, 0.0, 2.5402171879845981, 0.17933317025688861,
    0.39710110414240216, -0.23922756664761963, -0.067709773855570872, -0.0026380818249461139,
    0.00010500030164904011, 4.4870121840700399e-7, 0.0, 0.0,
    -0.010761926319605482, 0.69492034872840634, 0.45097165882629300, -0.18321521636839732,
    0.037055519798530075, 0.0015218489341718979, -0.0017267518406415885, 3.7569097724819390e-5,
    1.7413126831469366e-7, 0.0,
};
constexpr double kRightHP5[] = {
    0.92767357490984159, 0.35173148310518515, 0.11893028465641065, 0.037503632961179201,
    0.012077923946727154, -0.31898645167204747, 0.59798470663974775, 0.57749114743282603,
    0.36829401981319243, 0.22120723622975709, 0.14063094537630716, -0.42372754638808488,
    0.0072906315622594898, 0.30755418407569115, 0.39714075434824329, -0.064072626917168670,
    0.22797679719076418, -0.097627647876835484, -0.19240961556977191, -0.14433761259200917,
    0.017263333882149423, -0.065404784990714136, 0.039074125582139912, 0.053118348980598299,
    0.029480091006858910,
};
constexpr double kRighthP5[] = {
    0.0031449747243408038, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.13353994843982193, 0.066687455340895399, 0.017681854870103125,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.43898430193710194, 0.41885961235562968,
    0.35948069229205657, 0.21815510416052484, 0.057842766247719273, 0.0,
    0.0, 0.0, 0.0, -0.056563845041309901,
    0.091557125929021314, 0.21795341392034131, 0.43135245208115276, 0.63707906438892517,
    0.45902289022965620, 0.12170768978373019, 0.0, 0.0,
    -0.0016225470101487864, -0.048917960509575556, -0.031253588112020609, -0.074983251427911770,
    -0.16727913640043038, 0.20809202031782854, 0.73044886337984382, 0.59300090231742118,
    0.15723130893235334,
};
constexpr double kRightSeedP5[] = {
    1.2159419019092238, 0.59375659469630592, 0.24564369310888029, 0.077193886307441599,
    0.013674562815273089, 0.0, 0.0, 0.0,
    0.0, 0.0, -0.96238022935525431, 0.25443683874250969,
    0.61524662712838438, 0.52536351325047825, 0.28241880423801951, 0.076881900906993086,
    0.0, 0.0, 0.0, 0.0,
    0.71306641993230074, -0.30232186736026106, -0.22177342126818342, 0.22859783596302779,
    0.57404614093856627, 0.58747105530203743, 0.25150425990446901, 0.0,
    0.0, 0.0, -0.42899010997707992, 0.19336910267942079,
    0.054013980886963145, -0.19354102464003030, -0.18819965833916005, 0.15160396913559943,
    0.71734262129361360, 0.52919326701369009, 0.0, 0.0,
    0.13135651941410375, -0.059383121871450002, -0.0065907049101430137, 0.059564888308715316,
    0.038693438046509419, -0.058793894812324006, -0.19433805655141697, 0.52417994516813522,
    0.68365236575112240, 0.0,
};

constexpr double kFilterP6[] = {
    0.078871216001450708, 0.34975190703761783, 0.53113187994086898, 0.22291566146501776,
    -0.15999329944606139, -0.091759032030147576, 0.068944046487372299, 0.019461604854164664,
    -0.022331874165094535, 0.00039162557614857789, 0.0033780311814639379, -0.00076176690280125323,
};
constexpr double kLeftHP6[] = {
    0.18949177180317558, -0.065514684701294320, -0.20601655461127945, 0.54563551544240721,
    -0.44790492946167507, 0.63146151343909772, -0.13985452058175118, 0.11065095265416779,
    0.033909523367525980, -0.18891273959239045, 0.16700158762106189, 0.17416429415402367,
    0.30735807372425890, -0.24100188756173646, 0.21572594434089019, -0.11462811007080894,
    0.024877799911103243, 0.12380953700006290, -0.24151286544217624, 0.16849731239523037,
    -0.31500632108176564, 0.46051727478271864, -0.20836560765724655, -0.57006502763612204,
    -0.55439399056626565, 0.34808241277918241, -0.22528456054598220, -0.075735886987884751,
    0.30418456815794454, 0.46529668108779420, 0.00064929560600143752, -0.00013070899271190315,
    -0.00041124186576345116, -9.8547980723076683e-5, 0.00043149724479093528, 0.11154596372211869,
};
constexpr double kLefthP6[] = {
    -0.14239834700766589, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, -0.76290739479282070,
    0.52632822165514890, -0.11869026593572742, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.23933405156781620, 0.22402056930190904,
    -0.67104211807631440, 0.45133328270163554, -0.10177844384069600, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, -0.051115718665642376, 0.21975703992836646, -0.20793372173883501,
    0.24343837678116083, -0.24509151984489364, 0.13833657978216165, -0.031195753462259961,
    0.0, 0.0, 0.0, 0.0,
    0.24439700171413080, -0.15828036623521572, -0.12809804935632795, 0.22048844257799370,
    -0.20162634104691036, 0.11823233359751366, -0.038149312211854612, 0.0083551169489824486,
    -0.0018841304946185744, 0.0, 0.0, 0.49443175215018287,
    0.75098931729379224, 0.31561154857659994, -0.22607385276120421, -0.13045051353491230,
    0.097982826419580894, 0.027391689508422909, -0.031565563294349661, 0.00055013255855941860,
    0.0047772532906061619, -0.0010773001335958808,
};
constexpr double kLeftSeedP6[] = {
    -1.2142303409273975, 0.95323738900673144, 0.23784561491672109, 2.7314260063469574e-5,
    -0.00033761564207934958, 5.2267799470226434e-7, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.75193719933138341, -0.26376718191284498, 0.98124375613909114, 0.19826783944123409,
    -0.00024226623096068708, -0.00028099527701469071, 4.3565667364540957e-7, 0.0,
    0.0, 0.0, 0.0, 0.0,
    -1.1745846297008030, -0.039273786004599278, -0.24831768835596284, 0.86953988229989577,
    0.17021190316794031, -0.00024796707423705377, -0.00024089528925833296, 3.7358125321291951e-7,
    0.0, 0.0, 0.0, 0.0,
    0.81302245809426275, -0.29249205789437911, 0.10155317363463780, 0.29642262613308338,
    0.33234266352905014, 0.052024351519351106, -0.00016920929614369250, -7.3691303423223303e-5,
    1.1450507822258971e-7, 0.0, 0.0, 0.0,
    2.8256410536032008, 0.94543457467305594, -0.27490239923914812, 0.16293448747411870,
    0.27585963003629659, 0.059154221359959000, 0.0030018733586899460, -6.5348677340018080e-5,
    -4.3650408247010392e-6, 6.9157653117392326e-9, 0.0, 0.0,
    0.0012349596917268539, 0.43684970960179683, 0.83262963395167230, -0.38516810125243364,
    0.14368152635128185, -0.025297134044063684, -0.0035245481649082944, 0.0017595031720422439,
    1.5582749541003148e-5, -2.5779086048286829e-6, 3.9542669234079204e-9, 0.0,
};
constexpr double kRightHP6[] = {
    0.93093431356104883, 0.34462051687174863, 0.11503600995761795, 0.035297480945017293,
    0.010421242650572465, 0.0031178374224477570, -0.32018653243929191, 0.63000814860475467,
    0.57731289270790456, 0.34872786700085269, 0.18230051806107641, 0.097219300713997059,
    0.13912266927755996, -0.46329832736199593, 0.080562626664040359, 0.41562521679204168,
    0.45325096208312881, 0.40034134226236009, -0.069623822238338121, 0.28650412685652278,
    -0.20805235776598127, -0.26586314009191178, -0.092721511265486316, 0.068025885785805692,
    0.032517690539990019, -0.14669754935748438, 0.14583315348628777, 0.11300855473618481,
    -0.010565674332073752, -0.088621014269364520, -0.0081514415810994933, 0.038242841348966157,
    -0.042668264271727653, -0.025147324718548477, 0.0092868895152937327, 0.027040201055157115,
};
constexpr double kRighthP6[] = {
    0.00069586569083581533, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.050292980506046208,
    0.020798159925350366, 0.0046901135659242960, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.34242045628217144, 0.25986721946542787,
    0.17101767167102988, 0.081764892475281101, 0.018438488442779731, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.21842838099204796, 0.35285127628929010, 0.42607250164784256,
    0.45920449862743721, 0.41081375035928323, 0.22348334294020010, 0.050396874639105213,
    0.0, 0.0, 0.0, 0.0,
    -0.13711937897753991, -0.14542318883130174, -0.065187324095346988, 0.025393086497711866,
    0.15598324131441481, 0.48836772224372731, 0.67233086792539904, 0.40891238986612715,
    0.092212270406096492, 0.0, 0.0, 0.034669232390984910,
    0.032485023008834624, -0.0089237597250884003, -0.016220566323600280, 0.013329128173132075,
    -0.14563612835919438, -0.17418790623271325, 0.35101831968006421, 0.75221077238110730,
    0.48954047234056856, 0.11039440116983377,
};
constexpr double kRightSeedP6[] = {
    1.2244555645206811, 0.58900312549532672, 0.24817323600493345, 0.085995393894113587,
    0.021547000069726076, 0.0027257500885274720, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    -1.0147905551852286, 0.26949416523304174, 0.60614386541156271, 0.50710568388421679,
    0.28756010106310560, 0.10828153582087141, 0.018371472592889137, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.81300225957444342, -0.35129650067940201, -0.21202230434497281, 0.25110276237012070,
    0.54569487304453816, 0.53796861518882071, 0.32110040944776337, 0.072224729810795938,
    0.0, 0.0, 0.0, 0.0,
    -0.59990986920934594, 0.27157642279716267, 0.021316136813753867, -0.26705160812625300,
    -0.19431663431284896, 0.17469459987115479, 0.54432113739775928, 0.65586472522856274,
    0.19740775744246352, 0.0, 0.0, 0.0,
    0.34548603069223006, -0.15370650711501338, 0.022589372436097496, 0.14872735195676333,
    0.040362935525688587, -0.15009523411482594, -0.16885531565843775, 0.054123495445657587,
    0.88925428011548460, 0.36120131734162536, 0.0, 0.0,
    -0.095849921901286990, 0.041860191436868498, -0.010297033634069970, -0.038975932837887795,
    -0.0029797057632382853, 0.038016910327418889, 0.028097649806533620, 0.034536957981773768,
    -0.35231787011200005, 0.85821158996850704, 0.43242187784856415, 0.0,
};

constexpr double kFilterP7[] = {
    0.055049715372811849, 0.28039564181276256, 0.51557424581809867, 0.33218624110553967,
    -0.10175691123134624, -0.15841750564033284, 0.050423232504694087, 0.057001722579871576,
    -0.026891226294845439, -0.011719970782103289, 0.0088748961896807639, 0.00030375749770106935,
    -0.0012739523590936866, 0.00025011342656124533,
};
constexpr double kLeftHP7[] = {
    0.18109370433123187, -0.10815256908187188, -0.019441915226833797, 0.17676370615165535,
    -0.43179628525641183, 0.67913281251417019, -0.51571671423117110, -0.12189600350020640,
    0.10101906130367264, -0.034389568299563604, -0.041248908151217128, 0.14808800165861190,
    -0.23948256577819318, -0.36799262987891464, 0.28379215751417521, -0.20812642480842740,
    0.17543751328773951, -0.10150535827335206, -0.00087900036717480551, 0.043356087003273194,
    0.12844378249282302, -0.49983777499064445, 0.32527726725032795, -0.33014544433501053,
    0.33696058035096923, -0.16530579894309492, 0.13763923693861818, 0.20645802211285269,
    0.10510991914283822, 0.012698923585237735, 0.092275952518442197, -0.30838654482586759,
    0.24839030968905492, -0.12311545478043853, -0.47360379750695461, 0.28800756150986313,
    -0.13250492949564818, 0.15044050099763767, -0.20076584681399866, -0.045368917488689387,
    0.28239738003954708, 0.55372380782412836, -0.00028751271127410903, 0.00023305986791716585,
    0.00020943102512257047, -0.00038591276907846343, 1.5349731551810683e-5, 0.00024743749018966831,
    0.077866469914840006,
};
constexpr double kLefthP7[] = {
    0.10124997698956845, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.75483620256948969, -0.42498526288110588, 0.083436809530966226,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, -0.15933397148447852, -0.41971545759655861,
    0.68485155327851688, -0.37508985894429036, 0.073640909111917168, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.013195917912142725,
    -0.049405108874641323, 0.13445024114354775, -0.34576748235896755, 0.38884801142901391,
    -0.19983474536039510, 0.039233298287260918, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    -0.14553474698505706, 0.28562864674227113, -0.087792278714822597, -0.30206742823716298,
    0.47834881358968418, -0.34659548336202650, 0.17064033869440971, -0.063875666197969579,
    0.012540627310445285, 0.0, 0.0, 0.0,
    0.0, 0.45545716682163007, -0.012685190215489398, -0.30787070253446854,
    -0.043358474813284433, 0.30334154759634039, -0.21246046904641403, 0.077475128175851628,
    -0.025227892672616002, 0.0084984929854667729, -0.0022074778012020621, 0.00043339127477994515,
    0.0, 0.0, 0.39649574372515080, 0.72907958517297093,
    0.46984900762420752, -0.14384000277045245, -0.22414889826268053, 0.071317566556913805,
    0.080676070280417963, -0.038072339794100476, -0.016563976856200385, 0.012549604506369013,
    0.00042985104826411371, -0.0018016403201185679, 0.00035371372459824906,
};
constexpr double kLeftSeedP7[] = {
    0.65652720175336636, -1.0659516046771360, -0.27216793304028406, -0.014856796857719628,
    0.00057193447115945947, -1.1256383869463406e-5, -5.5968871526435215e-9, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, -0.46433836716247823, -0.19010220479662188,
    -1.0650931097835891, -0.23447485169197337, -0.011850718795619115, 0.00046359194231495169,
    -9.2798583059533605e-6, -4.6122124785227546e-9, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    1.0953293065682939, 0.27107978059865845, -0.22099267287634715, -0.98233747942049246,
    -0.20998148946355553, -0.010348195729504466, 0.00040709491751934053, -8.1913865512975726e-6,
    -4.0707155731990170e-9, 0.0, 0.0, 0.0,
    0.0, 0.0, -2.1626148276130290, -0.059032901659939016,
    -0.069059589159321833, -0.43756184367913602, -0.59081849118212370, -0.11526932152656589,
    -0.0053801674959264759, 0.00021421838639920781, -4.3654097175927315e-6, -2.1687347461069049e-9,
    0.0, 0.0, 0.0, 0.0,
    1.3097339523879059, -0.61688267644600064, 0.36879613608569988, -0.13866498868872013,
    -0.76556794759496266, -0.32180448777192298, -0.043330330245807527, -0.0014639942578848187,
    6.3317565158470659e-5, -1.3979322478745081e-6, -6.9321967240696802e-10, 0.0,
    0.0, 0.0, 1.8630388123301024, 0.89896743929567139,
    -0.23166325178345327, 0.17404353087324037, -0.42567429493271260, -0.16147222545317659,
    -0.023873593683928209, -0.0016565203153400570, -4.0300079335855442e-5, 1.8968012227468739e-6,
    -4.8454907556459061e-8, -2.3956964040925969e-11, 0.0, 0.0,
    0.0019834834988154882, 0.25279508990018155, 1.0098359853603844, -0.39220414443192169,
    0.18470165647368748, -0.066792045302202635, 0.010255919451414980, 0.0017685945639713863,
    -0.00054415651154183092, -6.6712517203509452e-5, 2.2728611509436822e-6, -3.9186982952718522e-8,
    -1.9552555563756743e-11, 0.0,
};
constexpr double kRightHP7[] = {
    0.93304313338753453, 0.33974929625046554, 0.11273051223658011, 0.034449800716176074,
    0.0098790335316732958, 0.0027835151810300986, 0.00077686960191095575, -0.32028228135349601,
    0.65003027787828653, 0.57309597624256515, 0.33413796221249229, 0.16476545006625697,
    0.076905233238068933, 0.037446405914471302, 0.13577697323299275, -0.48323463144645001,
    0.13440015561736314, 0.47323893802114081, 0.48233158745651437, 0.37024033400045311,
    0.27454384602385130, -0.067448147845733922, 0.30668401461379853, -0.28941007045108322,
    -0.27633940652335749, 0.00058346153132705980, 0.20550789694558681, 0.31528725092627648,
    0.036218441568229769, -0.18612767220292820, 0.24658609388213537, 0.10256668162680319,
    -0.12131763562140019, -0.19268093296241136, -0.17552350896429305, -0.016778747524436225,
    0.091347711314108634, -0.13872078584607501, -0.026054776370223983, 0.084963706966599810,
    0.095185053759866359, 0.063725925475923800, 0.0038774951998052633, -0.021680970408355247,
    0.034963334950785442, 0.0028560645323448825, -0.022518262636257378, -0.021630099382328743,
    -0.011836559581237647,
};
constexpr double kRighthP7[] = {
    0.00015162624290393605, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.017038440475211259, 0.0060578546613008121, 0.0011893308067076110,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.19814269668571030, 0.12692408046494788,
    0.069120312677653663, 0.027520194756956763, 0.0054030044068461786, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.38779946500180670,
    0.40921516600267458, 0.37440012346450674, 0.30321149327639081, 0.20334533525638139,
    0.089541141340289366, 0.017579497003135256, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    -0.10955101392316816, 0.0079753988795922829, 0.16643266467898836, 0.30660868416811842,
    0.41725123634533120, 0.50872761279094456, 0.44278087060874174, 0.21349421114147974,
    0.041915043618721868, 0.0, 0.0, 0.0,
    0.0, 0.011914459993137617, -0.051469031527863258, -0.12051364271185991,
    -0.12490279051212058, -0.071002219134164109, -0.054077093909026514, 0.14319573075262414,
    0.56243876411540027, 0.66912212051719668, 0.34785068183203382, 0.068293076537469924,
    0.0, 0.0, 0.0017180393897907873, 0.015009308850018156,
    0.033845315031952655, 0.020849101027117216, -0.017308795152849366, 0.038829711954597539,
    0.014225077387860908, -0.22575723121794898, -0.11110029104498425, 0.48729404186478145,
    0.72883044836492479, 0.39421095024046479, 0.077394928349401769,
};
constexpr double kRightSeedP7[] = {
    1.2303936338735841, 0.58576330992641033, 0.24972210298779155, 0.091488810564894928,
    0.026806126005482746, 0.0054175298152560713, 0.00049298670641728548, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, -1.0514311077768186, 0.28008036424418317,
    0.59962631932696129, 0.49515911615081045, 0.28878399310827229, 0.12359422767920748,
    0.034607494979673563, 0.0038669050027894477, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.88027474525603046, -0.38339447339239351, -0.19942718615168045, 0.26615582145811330,
    0.52842757059284582, 0.50977076760859598, 0.32577819363659353, 0.13028573873924709,
    0.017566941554943932, 0.0, 0.0, 0.0,
    0.0, 0.0, -0.70713265988025904, 0.31599941597813785,
    -0.019342476703455304, -0.30646727726050211, -0.18052144562892996, 0.19557017752940224,
    0.51130731660608009, 0.55784760556244419, 0.35384446243361154, 0.057156717478905615,
    0.0, 0.0, 0.0, 0.0,
    0.51494244080917280, -0.21912344440001707, 0.077680888131740566, 0.20136293996488598,
    0.0033005271788413965, -0.22917170710906283, -0.20182684413945171, 0.13832834720089339,
    0.51948348335384063, 0.70693104536414689, 0.13627957078658281, 0.0,
    0.0, 0.0, -0.28128286554743894, 0.11446053536864999,
    -0.057045482352428294, -0.096492565011340438, 0.028431556784064925, 0.12244752843651185,
    0.047234342295864820, -0.13173158432284087, -0.12124478588924806, 0.016018194102356492,
    0.98174017117614452, 0.22204321777359636, 0.0, 0.0,
    0.070677591308213679, -0.027949770638697508, 0.015888574932799950, 0.022151141531896487,
    -0.010254891426353628, -0.028832797639994504, -0.0033599164306959725, 0.033641571827363585,
    -0.014770779946223503, 0.095977293723371936, -0.35555055042170341, 1.0167668387943464,
    0.25163632686293331, 0.0,
};

constexpr double kFilterP8[] = {
    0.038477811054076237, 0.22123362357612492, 0.47774307521387370, 0.41390826621119589,
    -0.011192867666880218, -0.20082931639048905, 0.00033409704622011878, 0.091038178423657745,
    -0.012281950522848409, -0.031175103325139428, 0.0098860796483507590, 0.0061844224098159224,
    -0.0034438596284418091, -0.00027700227447938932, 0.00047761485564962615, -8.3068630686612691e-5,
};
constexpr double kLeftHP8[] = {
    0.055333418784576013, -0.055520767232760110, -0.021721412070232825, 0.10271225616971547,
    -0.11777004938654104, 0.39060638223363012, -0.78278791685681407, 0.44458408523143942,
    -0.030788968988652929, 0.045151464701401983, -0.0095269683710264604, -0.034426530458025976,
    0.044650027686865063, -0.13486097330851062, 0.26773774472594946, 0.49151858389390424,
    0.18634294077194847, -0.15235552949749975, 0.15113491877517378, -0.13004847165572523,
    0.043693753470183733, 0.052021522623142144, -0.12253651615576624, -0.23961318026199239,
    -0.41842946555784251, 0.29819108196235162, -0.33807110024715727, 0.40267200627135018,
    -0.18609528904329753, 0.019723711291822413, 0.019597880038383804, -0.057302646406828214,
    0.25547420909882404, -0.12268639417470755, 0.20032723908342852, -0.37488354905162589,
    0.24128208594298772, -0.056751084076152872, 0.030613734907936077, 0.22304211978798973,
    0.21104139632426023, -0.31594577557269834, 0.11882819931639999, 0.30023593304832872,
    -0.39195417548193411, 0.14552055437216259, 0.049267972334255458, -0.32046589681808081,
    0.016082860991925082, -0.097499148670529448, 0.0014502322976557805, 0.21137813309771067,
    -0.20614935267236192, -0.062603969381463735, 0.31315359052406669, 0.58070309736839286,
    0.00015343577990220791, -0.00015460589952348010, -3.5835389061526878e-5, 0.00013418838514578332,
    -4.4724919299428392e-5, -2.1296915655282301e-5, 5.2368283746678512e-5, 0.054441251273356192,
};
constexpr double kLefthP8[] = {
    -0.077323785922825616, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, -0.73116071502988370,
    0.35204726408294707, -0.061229427473654482, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.086590082410793742, 0.53459532077794224,
    -0.65874037727663086, 0.30847581472183834, -0.053651311775106023, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, -0.028482412866292942, -0.030609926941092814, -0.13283307705600701,
    0.42477196391522519, -0.42749420017995558, 0.19280571749427686, -0.033533519218147462,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.034984767892984156, -0.28864223377617184, 0.10860025775104089, 0.32647315553732136,
    -0.49179423952542634, 0.37013624382117491, -0.19891303314893872, 0.073355232205279504,
    -0.012758226887023861, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, -0.26592985937996350,
    0.079460884953503363, 0.14258309664043509, -0.17900040800392318, -0.039495877695454055,
    0.34384423979472659, -0.39681141710669933, 0.23520459082464041, -0.092976095379430984,
    0.028389776305267266, -0.0049376601570949068, 0.0, 0.0,
    0.0, 0.0, 0.52824610951904241, 0.039699676059294587,
    -0.26028691587798815, -0.10055881295326479, 0.15294790049269862, 0.12145621929469713,
    -0.22529244768774211, 0.12333634657568743, -0.034356838581677415, 0.0084073498752272057,
    -0.0028492508909434913, 0.00075625445278147478, -0.00013153071161860096, 0.0,
    0.0, 0.31285721520241791, 0.67557180123847611, 0.58537373984968416,
    -0.015735491276458433, -0.28406615047193992, 0.00037108459219399559, 0.12889201290091738,
    -0.017448433488621619, -0.044064456386197126, 0.013975552874558091, 0.0087470501992871914,
    -0.0048703552033246078, -0.00039173991075503595, 0.00067544936377342614, -0.00011747677670219503,
};
constexpr double kLeftSeedP8[] = {
    0.14445389971422050, 0.78836278621471649, 0.12726296052382686, 0.028102762489842023,
    0.0012793047367523711, 2.6298803823172739e-5, -1.5033256598301220e-7, 2.5033024441333969e-11,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    -0.051590252647337528, 0.49313787850783791, 0.68541165643729184, 0.11427547509310947,
    0.022867998881437631, 0.0010256618391829369, 2.0752683794152382e-5, -1.1902995821791589e-7,
    1.9822590632159094e-11, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    -0.62547067649048676, -0.30476239100513386, 0.56901392735794288, 0.61986951902872805,
    0.10622437965301694, 0.020326939800053521, 0.00090492246738289170, 1.8149063379911965e-5,
    -1.0429225651751041e-7, 1.7369229700112171e-11, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    1.7923879203845875, -0.055159771803115386, -0.019890912513810526, 0.54252366682028346,
    0.41695902648915968, 0.072270995552204002, 0.012968441653788665, 0.00057094632761447150,
    1.1313009922979820e-5, -6.5180374342133143e-8, 1.0856237782118574e-11, 0.0,
    0.0, 0.0, 0.0, 0.0,
    -1.7963060455949387, 0.27483357459459225, -0.38216520335403239, 0.31234641543367337,
    0.61336693381657727, 0.22872554112151407, 0.041165115988811562, 0.0055443702300426901,
    0.00022949978599077183, 4.2336675282641958e-6, -2.4786908510165927e-8, 4.1303849996392110e-12,
    0.0, 0.0, 0.0, 0.0,
    2.2988758536979709, -0.45673645294877701, 0.10266294416899000, -0.26516657322645762,
    0.39200551951852493, 0.43666353670755085, 0.12375116865698717, 0.022155750322544542,
    0.0024189759953868327, 9.4210986179913877e-5, 1.6074186511801141e-6, -9.5877956619717973e-9,
    1.5985322746473313e-12, 0.0, 0.0, 0.0,
    1.5536551854506352, 0.87288201930408979, -0.11184582516524626, -0.059415345549521903,
    0.095595991785130211, 0.22059530361307629, 0.050063884925520487, 0.011132365278435761,
    0.0010516120801510754, 7.7241331046932502e-5, 2.5982852161507769e-6, 4.2100912704785366e-8,
    -2.5528166112276716e-10, 4.2582130187219977e-14, 0.0, 0.0,
    0.00062178113378819483, 0.13674654592444825, 0.99147665246371021, -0.16855941271410130,
    0.071018126746102064, -0.049051642642038680, 0.023568554181452816, -0.0062123524922858001,
    0.00073985019731182149, -9.6072270614392682e-5, 2.8278293425162114e-5, 1.6175886362831572e-6,
    4.1783595207671372e-8, -2.2870209311589181e-10, 3.8032268950336940e-14, 0.0,
};
constexpr double kRightHP8[] = {
    0.93451745183682191, 0.33621642737243979, 0.11123170254746945, 0.034064633648797224,
    0.0097526633777412280, 0.0026611367026167190, 0.00072288040538423421, 0.00018853245458583598,
    -0.32004136376450067, 0.66364373995985871, 0.56849753293071709, 0.32327026886567428,
    0.15440197959102980, 0.067513974525762353, 0.029229235751632644, 0.013163474971832723,
    0.13254315242467655, -0.49455943928394081, 0.17355052696261381, 0.50488314908350778,
    0.48948841580916268, 0.35356561813505511, 0.22935120052564697, 0.15124770838315499,
    -0.064037673550812944, 0.31266641650194004, -0.34498378934348944, -0.26182874721791165,
    0.084492533272259487, 0.31258967147786631, 0.37756630139936864, 0.38349290532501272,
    0.034695127992780046, -0.19618903046266253, 0.31112796862397202, 0.052831217209893852,
    -0.21940317748582799, -0.23987548973243260, -0.12946290691917878, -0.0044261734505784382,
    -0.019368052782698496, 0.11857231195686203, -0.22193787137568628, 0.027534795485055963,
    0.17432972514010070, 0.11319509441278508, 0.0025757579667996448, -0.084696952158277447,
    0.0087238227661563745, -0.055535274076058736, 0.11220305733549440, -0.030233338905113928,
    -0.087454638672468906, -0.039273611245903587, 0.018243341774706762, 0.055415428987444751,
    -0.0018523727966221650, 0.012021880126603037, -0.025205500607215079, 0.0086624977635559199,
    0.019207422575873156, 0.0066561389395982194, -0.0059951987735154314, -0.013228939597971495,
};
constexpr double kRighthP8[] = {
    3.2680486479861418e-5, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0053627849953215630,
    0.0016798896602772886, 0.00029217293418151779, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.095710190180092074, 0.053510863426970296,
    0.025114016049088463, 0.0086187177687575262, 0.0014990008682859651, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.36307179709617893, 0.30967373673060969, 0.23518730268330729,
    0.15688548541232033, 0.085997357806213648, 0.032011710717784963, 0.0055676010572273784,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.13249707876114709, 0.26475761883176935, 0.36805246232827010, 0.41484534351758689,
    0.40411501779321422, 0.34591356079306154, 0.22704572720603204, 0.090991346967883735,
    0.015825568462839930, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, -0.15029742031864670,
    -0.17299297629465740, -0.14123052013440550, -0.034422596167903332, 0.11639338917672485,
    0.25339320005855239, 0.42399670924005207, 0.55784868668241070, 0.45190914797924856,
    0.19349802367364880, 0.033653927797688161, 0.0, 0.0,
    0.0, 0.0, 0.074970597569318707, 0.067290927351102443,
    0.037290526545858328, -0.030851567610229181, -0.099393444895010652, -0.083035241718605252,
    -0.097191332080812036, -0.12230157160035640, 0.18308540167199828, 0.62997401111405716,
    0.63431047111069266, 0.28611086510096194, 0.049761512874579017, 0.0,
    0.0, -0.015956727120718473, -0.012092159160822422, -0.0066092843386090861,
    0.012140788302140487, 0.032170364885420047, -0.0070373502292479070, -0.0045106197595319853,
    0.093385271233662923, -0.034387553891109792, -0.28024128699178381, 0.0034528705029759313,
    0.59361109473828728, 0.67514506604972455, 0.31182382639064312, 0.054233610967772753,
};
constexpr double kRightSeedP8[] = {
    1.2347615045735487, 0.58341673152989722, 0.25076810315406560, 0.095247583591480763,
    0.030532999870975476, 0.0076215504700337117, 0.0012530347065427284, 8.2193910541324424e-5,
    0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    -1.0785645094783654, 0.28789815658217662, 0.59474959523167210, 0.48671299718844333,
    0.28887754205916882, 0.13252358393424590, 0.045047881769978402, 0.0096878178098557907,
    0.00073483716435832498, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.92935657038552181, -0.40588742828026781, -0.18769660891758970, 0.27675612087670421,
    0.51638778585998419, 0.49143166582419958, 0.32598691108283148, 0.15259970178386202,
    0.043667690210196935, 0.0037701012604322383, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0,
    -0.78124355741910945, 0.34236932389243724, -0.055661702163417259, -0.32785108318441880,
    -0.16268509139996675, 0.20920961895089079, 0.48786704862700566, 0.52461840976532193,
    0.35892345519156342, 0.14387780606382678, 0.014002940363495806, 0.0,
    0.0, 0.0, 0.0, 0.0,
    0.62596862320099413, -0.25154445912598005, 0.13050328797926737, 0.21733047729752164,
    -0.044325921463221384, -0.27042395431263339, -0.19736988749575403, 0.14078618589347580,
    0.49189903961968372, 0.58151472054559811, 0.36521029716784969, 0.039802509038592078,
    0.0, 0.0, 0.0, 0.0,
    -0.44689201083697221, 0.16477893244665750, -0.11949748856085541, -0.11947671786787426,
    0.088049731197343099, 0.17572552021216718, 0.026657589424278945, -0.19560084702752830,
    -0.21942568246429536, 0.11358488430287551, 0.54371060386878487, 0.69888367481477405,
    0.084642189536313837, 0.0, 0.0, 0.0,
    0.23004199858921393, -0.080033020018688893, 0.066805402507975885, 0.050169287403116500,
    -0.056262805303218480, -0.078806790280256176, 0.012869823913278407, 0.10298396824790945,
    0.066381916833449124, -0.12564374626170350, -0.12962898876959068, 0.12845222837762659,
    0.94814199651341163, 0.12515399182122137, 0.0, 0.0,
    -0.052442920570394101, 0.017611290223264959, -0.015724960324640433, -0.0099955923074387273,
    0.013790784090053722, 0.016220691758681906, -0.0056304027002030578, -0.022430858063373648,
    -0.011748645841862229, 0.043488766872262477, -0.018465961635184599, 0.015848306311133187,
    -0.14285291583926234, 0.99268010376052917, 0.13640165886040407, 0.0,
};

constexpr FamilyTable kTables[] = {
    {1, kFilterP1, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr},
    {2, kFilterP2, kLeftHP2, kLefthP2, kLeftSeedP2, kRightHP2, kRighthP2, kRightSeedP2},
    {3, kFilterP3, kLeftHP3, kLefthP3, kLeftSeedP3, kRightHP3, kRighthP3, kRightSeedP3},
    {4, kFilterP4, kLeftHP4, kLefthP4, kLeftSeedP4, kRightHP4, kRighthP4, kRightSeedP4},
    {5, kFilterP5, kLeftHP5, kLefthP5, kLeftSeedP5, kRightHP5, kRighthP5, kRightSeedP5},
    {6, kFilterP6, kLeftHP6, kLefthP6, kLeftSeedP6, kRightHP6, kRighthP6, kRightSeedP6},
    {7, kFilterP7, kLeftHP7, kLefthP7, kLeftSeedP7, kRightHP7, kRighthP7, kRightSeedP7},
    {8, kFilterP8, kLeftHP8, kLefthP8, kLeftSeedP8, kRightHP8, kRighthP8, kRightSeedP8},
};

}  // namespace

const FamilyTable* family_table(int p) {
    if (p < 1 || p > 8) return nullptr;
    return &kTables[p - 1];
}

}  // namespace gs::detail
