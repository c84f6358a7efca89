// Synthetic NMC-shaped open-circuit-voltage table for a 5 Ah cell,
// sampled on a uniform SOC grid. Strictly increasing from 2.5 V to 4.2 V
// with the curvature/slope-change structure the region derivation expects.
pub(crate) const DEFAULT_OCV_TABLE: [(f64, f64); 1001] = [
    (0.0, 2.5),
    (0.001, 2.5044592398839134),
    (0.002, 2.508892587651644),
    (0.003, 2.51330015118701),
    (0.004, 2.517682038373828),
    (0.005, 2.5220383570959157),
    (0.006, 2.5263692152370902),
    (0.007, 2.5306747206811697),
    (0.008, 2.534954981311971),
    (0.009000000000000001, 2.539210105013312),
    (0.01, 2.5434401996690097),
    (0.011, 2.5476453731628816),
    (0.012, 2.5518257333787453),
    (0.013000000000000001, 2.555981388200418),
    (0.014, 2.5601124455117175),
    (0.015, 2.5642190131964604),
    (0.016, 2.568301199138465),
    (0.017, 2.572359111221549),
    (0.018000000000000002, 2.5763928573295285),
    (0.019, 2.5804025453462223),
    (0.02, 2.5843882831554468),
    (0.021, 2.58835017864102),
    (0.022, 2.592288339686759),
    (0.023, 2.5962028741764818),
    (0.024, 2.6000938899940054),
    (0.025, 2.603961495023147),
    (0.026000000000000002, 2.607805797147724),
    (0.027, 2.6116269042515547),
    (0.028, 2.6154249242184555),
    (0.029, 2.6191999649322444),
    (0.03, 2.622952134276739),
    (0.031, 2.626681540135756),
    (0.032, 2.6303882903931135),
    (0.033, 2.6340724929326287),
    (0.034, 2.6377342556381187),
    (0.035, 2.6413736863934014),
    (0.036000000000000004, 2.6449908930822943),
    (0.037, 2.648585983588614),
    (0.038, 2.652159065796179),
    (0.039, 2.655710247588806),
    (0.04, 2.659239636850313),
    (0.041, 2.6627473414645166),
    (0.042, 2.666233469315235),
    (0.043000000000000003, 2.6696981282862855),
    (0.044, 2.6731414262614854),
    (0.045, 2.676563471124652),
    (0.046, 2.6799643707596026),
    (0.047, 2.683344233050155),
    (0.048, 2.6867031658801266),
    (0.049, 2.690041277133335),
    (0.05, 2.6933586746935965),
    (0.051000000000000004, 2.69665546644473),
    (0.052000000000000005, 2.699931760270552),
    (0.053, 2.7031876640548806),
    (0.054, 2.7064232856815327),
    (0.055, 2.7096387330343257),
    (0.056, 2.712834113997077),
    (0.057, 2.7160095364536043),
    (0.058, 2.7191651082877253),
    (0.059000000000000004, 2.722300937383257),
    (0.06, 2.7254171316240168),
    (0.061, 2.7285137988938226),
    (0.062, 2.7315910470764915),
    (0.063, 2.734648984055841),
    (0.064, 2.737687717715688),
    (0.065, 2.74070735593985),
    (0.066, 2.7437080066121453),
    (0.067, 2.7466897776163908),
    (0.068, 2.749652776836404),
    (0.069, 2.7525971121560016),
    (0.07, 2.7555228914590018),
    (0.07100000000000001, 2.7584302226292223),
    (0.07200000000000001, 2.7613192135504803),
    (0.073, 2.7641899721065926),
    (0.074, 2.767042606181377),
    (0.075, 2.7698772236586517),
    (0.076, 2.772693932422233),
    (0.077, 2.7754928403559394),
    (0.078, 2.7782740553435867),
    (0.079, 2.781037685268994),
    (0.08, 2.7837838380159776),
    (0.081, 2.786512621468356),
    (0.082, 2.7892241435099456),
    (0.083, 2.7919185120245644),
    (0.084, 2.79459583489603),
    (0.085, 2.7972562200081583),
    (0.08600000000000001, 2.799899775244769),
    (0.08700000000000001, 2.8025266084896785),
    (0.088, 2.8051368276267037),
    (0.089, 2.8077305405396626),
    (0.09, 2.810307855112373),
    (0.091, 2.8128688792286516),
    (0.092, 2.815413720772316),
    (0.093, 2.817942487627184),
    (0.094, 2.8204552876770723),
    (0.095, 2.822952228805799),
    (0.096, 2.8254334188971817),
    (0.097, 2.827898965835037),
    (0.098, 2.8303489775031827),
    (0.099, 2.832783561785436),
    (0.1, 2.835202826565615),
    (0.101, 2.8376068797275367),
    (0.10200000000000001, 2.8399958291550185),
    (0.10300000000000001, 2.8423697827318777),
    (0.10400000000000001, 2.844728848341932),
    (0.105, 2.847073133868999),
    (0.106, 2.849402747196896),
    (0.107, 2.8517177962094395),
    (0.108, 2.8540183887904482),
    (0.109, 2.8563046328237394),
    (0.11, 2.8585766361931304),
    (0.111, 2.860834506782438),
    (0.112, 2.8630783524754797),
    (0.113, 2.8653082811560737),
    (0.114, 2.8675244007080365),
    (0.115, 2.869726819015187),
    (0.116, 2.8719156439613407),
    (0.117, 2.8740909834303165),
    (0.11800000000000001, 2.876252945305931),
    (0.11900000000000001, 2.878401637472002),
    (0.12, 2.880537167812347),
    (0.121, 2.8826596442107837),
    (0.122, 2.8847691745511286),
    (0.123, 2.8868658667171996),
    (0.124, 2.8889498285928137),
    (0.125, 2.8910211680617888),
    (0.126, 2.893079993007943),
    (0.127, 2.8951264113150925),
    (0.128, 2.897160530867056),
    (0.129, 2.8991824595476503),
    (0.13, 2.9011923052406927),
    (0.131, 2.9031901758300003),
    (0.132, 2.905176179199391),
    (0.133, 2.907150423232682),
    (0.134, 2.909113015813691),
    (0.135, 2.9110640648262347),
    (0.136, 2.9130036781541317),
    (0.137, 2.9149319636811986),
    (0.138, 2.916849029291253),
    (0.139, 2.918754982868113),
    (0.14, 2.9206499322955946),
    (0.14100000000000001, 2.9225339854575165),
    (0.14200000000000002, 2.9244072502376954),
    (0.14300000000000002, 2.9262698345199487),
    (0.14400000000000002, 2.9281218461880947),
    (0.145, 2.9299633931259494),
    (0.146, 2.9317945832173313),
    (0.147, 2.933615524346058),
    (0.148, 2.935426324395947),
    (0.149, 2.937227091250815),
    (0.15, 2.939017932794479),
    (0.151, 2.9407989569107578),
    (0.152, 2.942570271483468),
    (0.153, 2.9443319843964275),
    (0.154, 2.946084203533453),
    (0.155, 2.9478270367783623),
    (0.156, 2.949560592014973),
    (0.157, 2.9512849771271017),
    (0.158, 2.953000299998567),
    (0.159, 2.954706668513186),
    (0.16, 2.956404190554776),
    (0.161, 2.9580929740071538),
    (0.162, 2.9597731267541376),
    (0.163, 2.961444756679545),
    (0.164, 2.9631079716671924),
    (0.165, 2.9647628796008982),
    (0.166, 2.96640958836448),
    (0.167, 2.9680482058417543),
    (0.168, 2.9696788399165395),
    (0.169, 2.9713015984726523),
    (0.17, 2.9729165893939102),
    (0.171, 2.9745239205641307),
    (0.17200000000000001, 2.9761236998671317),
    (0.17300000000000001, 2.97771603518673),
    (0.17400000000000002, 2.979301034406743),
    (0.17500000000000002, 2.980878805410989),
    (0.176, 2.982449456083284),
    (0.177, 2.9840130943074468),
    (0.178, 2.985569827967294),
    (0.179, 2.987119764946643),
    (0.18, 2.9886630131293117),
    (0.181, 2.990199680399117),
    (0.182, 2.991729874639877),
    (0.183, 2.9932537037354083),
    (0.184, 2.9947712755695295),
    (0.185, 2.996282698026057),
    (0.186, 2.9977880789888087),
    (0.187, 2.9992875263416012),
    (0.188, 3.0007811479682527),
    (0.189, 3.0022690517525805),
    (0.19, 3.0037513455784026),
    (0.191, 3.005228137329536),
    (0.192, 3.0066995348897976),
    (0.193, 3.0081656461430053),
    (0.194, 3.009626578972977),
    (0.195, 3.0110824412635293),
    (0.196, 3.0125333408984805),
    (0.197, 3.013979385761646),
    (0.198, 3.0154206837368456),
    (0.199, 3.0168573427078957),
    (0.2, 3.0182894705586145),
    (0.201, 3.019717175172819),
    (0.202, 3.021140564434325),
    (0.203, 3.022559746226952),
    (0.20400000000000001, 3.0239748284345174),
    (0.20500000000000002, 3.025385918940837),
    (0.20600000000000002, 3.0267931256297294),
    (0.20700000000000002, 3.0281965563850117),
    (0.20800000000000002, 3.029596319090502),
    (0.209, 3.030992521630017),
    (0.21, 3.032385271887374),
    (0.211, 3.0337746777463916),
    (0.212, 3.0351608470908866),
    (0.213, 3.036543887804675),
    (0.214, 3.037923907771576),
    (0.215, 3.039301014875406),
    (0.216, 3.040675316999983),
    (0.217, 3.042046922029124),
    (0.218, 3.043415937846648),
    (0.219, 3.0447824723363706),
    (0.22, 3.0461466333821097),
    (0.221, 3.0475085288676835),
    (0.222, 3.048868266676908),
    (0.223, 3.0502259546936012),
    (0.224, 3.051581700801581),
    (0.225, 3.052935612884664),
    (0.226, 3.054287798826669),
    (0.227, 3.055638366511412),
    (0.228, 3.056987423822711),
    (0.229, 3.058335078644383),
    (0.23, 3.0596814388602467),
    (0.231, 3.061026612354118),
    (0.232, 3.0623707070098165),
    (0.233, 3.0637138307111575),
    (0.234, 3.0650560913419587),
    (0.23500000000000001, 3.0663975967860377),
    (0.23600000000000002, 3.0677384549272126),
    (0.23700000000000002, 3.0690787736493013),
    (0.23800000000000002, 3.0704186608361193),
    (0.23900000000000002, 3.0717582243714854),
    (0.24, 3.0730975721392166),
    (0.241, 3.0744368120231305),
    (0.242, 3.0757760524294735),
    (0.243, 3.077115407939296),
    (0.244, 3.078455004572296),
    (0.245, 3.07979497961459),
    (0.246, 3.0811354809122897),
    (0.247, 3.0824766661650704),
    (0.248, 3.083818702219744),
    (0.249, 3.0851617643638303),
    (0.25, 3.0865060356191325),
    (0.251, 3.0878517060353063),
    (0.252, 3.08919897198343),
    (0.253, 3.0905480354495793),
    (0.254, 3.091899103328399),
    (0.255, 3.093252386716674),
    (0.256, 3.094608100206902),
    (0.257, 3.095966461180865),
    (0.258, 3.097327689103199),
    (0.259, 3.0986920048149735),
    (0.26, 3.100059629827254),
    (0.261, 3.1014307856146788),
    (0.262, 3.1028056929090306),
    (0.263, 3.1041845709928104),
    (0.264, 3.1055676369928045),
    (0.265, 3.1069551051736592),
    (0.266, 3.108347186231455),
    (0.267, 3.1097440865872734),
    (0.268, 3.1111460076807744),
    (0.269, 3.1125531452637643),
    (0.27, 3.11396568869377),
    (0.271, 3.1153838202276085),
    (0.272, 3.1168077143149615),
    (0.273, 3.1182375368919466),
    (0.274, 3.119673444674688),
    (0.275, 3.1211155844528897),
    (0.276, 3.1225640923834086),
    (0.277, 3.124019093283822),
    (0.278, 3.1254806999260056),
    (0.279, 3.126949012329701),
    (0.28, 3.1284241170560882),
    (0.281, 3.12990608650136),
    (0.28200000000000003, 3.131394978190291),
    (0.28300000000000003, 3.132890834069811),
    (0.28400000000000003, 3.134393679802577),
    (0.28500000000000003, 3.13590352414409),
    (0.28600000000000003, 3.13742035933064),
    (0.28700000000000003, 3.13894416219076),
    (0.28800000000000003, 3.1404748948159096),
    (0.289, 3.142012505169541),
    (0.29, 3.14355692769615),
    (0.291, 3.1451080839303462),
    (0.292, 3.1466658831059107),
    (0.293, 3.148230222764854),
    (0.294, 3.1498009893664847),
    (0.295, 3.1513780588964644),
    (0.296, 3.1529612974758736),
    (0.297, 3.1545505619702663),
    (0.298, 3.1561457005987386),
    (0.299, 3.157746553542986),
    (0.3, 3.1593529535563647),
    (0.301, 3.1609647265729546),
    (0.302, 3.16258169231662),
    (0.303, 3.1642036649100653),
    (0.304, 3.165830453483906),
    (0.305, 3.167461862785723),
    (0.306, 3.1690976937891273),
    (0.307, 3.1707377443028184),
    (0.308, 3.1723818095796457),
    (0.309, 3.174029682925673),
    (0.31, 3.175681156309235),
    (0.311, 3.177336020970003),
    (0.312, 3.1789940680280453),
    (0.313, 3.1806550890928844),
    (0.314, 3.1823188768725634),
    (0.315, 3.1839852257827035),
    (0.316, 3.1856539325555655),
    (0.317, 3.187324796849113),
    (0.318, 3.1889976218560747),
    (0.319, 3.1906722149130013),
    (0.32, 3.192348388109331),
    (0.321, 3.194025958896446),
    (0.322, 3.195704750696739),
    (0.323, 3.1973845935126697),
    (0.324, 3.1990653245358303),
    (0.325, 3.2007467887560037),
    (0.326, 3.2024288395702243),
    (0.327, 3.2041113393918432),
    (0.328, 3.2057941602595825),
    (0.329, 3.207477184446606),
    (0.33, 3.2091603050695725),
    (0.331, 3.210843426079654),
    (0.332, 3.2125264560080486),
    (0.333, 3.2142093014423345),
    (0.334, 3.215891866536281),
    (0.335, 3.217574053129543),
    (0.336, 3.2192557608673567),
    (0.337, 3.220936887320235),
    (0.338, 3.222617328103661),
    (0.339, 3.2242969769977887),
    (0.34, 3.2259757260671345),
    (0.341, 3.227653465780273),
    (0.342, 3.2293300851295346),
    (0.343, 3.2310054717506995),
    (0.34400000000000003, 3.232679512042692),
    (0.34500000000000003, 3.2343520912872794),
    (0.34600000000000003, 3.2360230937687646),
    (0.34700000000000003, 3.237692402893687),
    (0.34800000000000003, 3.239359901310508),
    (0.34900000000000003, 3.241025471029316),
    (0.35000000000000003, 3.2426889935415177),
    (0.35100000000000003, 3.244350349939538),
    (0.352, 3.246009421036507),
    (0.353, 3.247666087485962),
    (0.354, 3.249320229901544),
    (0.355, 3.2509717289766886),
    (0.356, 3.2526204656043247),
    (0.357, 3.2542663209965714),
    (0.358, 3.255909176804429),
    (0.359, 3.257548915237477),
    (0.36, 3.2591854191835727),
    (0.361, 3.260818572328541),
    (0.362, 3.262448259275874),
    (0.363, 3.264074365666425),
    (0.364, 3.265696778298106),
    (0.365, 3.2673153852455803),
    (0.366, 3.2689300759799584),
    (0.367, 3.270540741488499),
    (0.368, 3.2721472743942948),
    (0.369, 3.273749569075979),
    (0.37, 3.2753475217874115),
    (0.371, 3.2769410307773796),
    (0.372, 3.2785299964092927),
    (0.373, 3.2801143212808785),
    (0.374, 3.2816939103438756),
    (0.375, 3.2832686710237327),
    (0.376, 3.284838513339302),
    (0.377, 3.2864033500225363),
    (0.378, 3.2879630966381814),
    (0.379, 3.2895176717034755),
    (0.38, 3.2910669968078436),
    (0.381, 3.2926109967325927),
    (0.382, 3.2941495995706056),
    (0.383, 3.2956827368460404),
    (0.384, 3.297210343634023),
    (0.385, 3.298732358680342),
    (0.386, 3.300248724521149),
    (0.387, 3.301759387602649),
    (0.388, 3.303264298400798),
    (0.389, 3.3047634115409994),
    (0.39, 3.306256685917798),
    (0.391, 3.307744084814577),
    (0.392, 3.3092255760232527),
    (0.393, 3.3107011319639703),
    (0.394, 3.3121707298047984),
    (0.395, 3.3136343515814266),
    (0.396, 3.3150919843168607),
    (0.397, 3.316543620141116),
    (0.398, 3.3179892564729663),
    (0.399, 3.319428896782843),
    (0.4, 3.320862551193492),
    (0.401, 3.322290236371663),
    (0.402, 3.3237119753528153),
    (0.403, 3.325127797365839),
    (0.404, 3.3265377376577643),
    (0.405, 3.3279418373184773),
    (0.406, 3.329340143105437),
    (0.40700000000000003, 3.3307327072683863),
    (0.40800000000000003, 3.3321195873740668),
    (0.40900000000000003, 3.3335008461309346),
    (0.41000000000000003, 3.3348765512138723),
    (0.41100000000000003, 3.3362467750889064),
    (0.41200000000000003, 3.33761159483792),
    (0.41300000000000003, 3.3389710919833653),
    (0.41400000000000003, 3.34032535231298),
    (0.41500000000000004, 3.341674465704504),
    (0.41600000000000004, 3.343018525950389),
    (0.417, 3.344357630582512),
    (0.418, 3.345691880696897),
    (0.419, 3.3470213807784237),
    (0.42, 3.348346238525541),
    (0.421, 3.349666564674983),
    (0.422, 3.3509824728264856),
    (0.423, 3.352294079267497),
    (0.424, 3.3536015027978934),
    (0.425, 3.3549048645546966),
    (0.426, 3.356204287836782),
    (0.427, 3.357499897929596),
    (0.428, 3.3587918219298727),
    (0.429, 3.360080188570344),
    (0.43, 3.3613651280444574),
    (0.431, 3.362646771831089),
    (0.432, 3.3639252525192544),
    (0.433, 3.365200703632831),
    (0.434, 3.366473259455264),
    (0.435, 3.367743054854285),
    (0.436, 3.369010225106626),
    (0.437, 3.370274905722734),
    (0.438, 3.371537232271484),
    (0.439, 3.372797340204892),
    (0.44, 3.374055364682835),
    (0.441, 3.3753114403977573),
    (0.442, 3.3765657013993917),
    (0.443, 3.3778182809194703),
    (0.444, 3.37906931119644),
    (0.445, 3.3803189233001767),
    (0.446, 3.381567246956699),
    (0.447, 3.3828144103728803),
    (0.448, 3.384060540061169),
    (0.449, 3.385305760664298),
    (0.45, 3.3865501947800025),
    (0.451, 3.387793962785729),
    (0.452, 3.3890371826633556),
    (0.453, 3.3902799698239017),
    (0.454, 3.391522436932246),
    (0.455, 3.392764693731838),
    (0.456, 3.3940068468694125),
    (0.457, 3.3952490000207254),
    (0.458, 3.396491257021771),
    (0.459, 3.3977337249809705),
    (0.46, 3.39897651437087),
    (0.461, 3.400219738818248),
    (0.462, 3.4014635148942194),
    (0.463, 3.402707961904344),
    (0.464, 3.4039532016787275),
    (0.465, 3.40519935836213),
    (0.466, 3.4064465582040695),
    (0.467, 3.4076949293489283),
    (0.468, 3.4089446016260587),
    (0.46900000000000003, 3.4101957063398873),
    (0.47000000000000003, 3.4114483760600214),
    (0.47100000000000003, 3.412702744411354),
    (0.47200000000000003, 3.4139589458641684),
    (0.47300000000000003, 3.4152171155242455),
    (0.47400000000000003, 3.416477388922966),
    (0.47500000000000003, 3.417739901807418),
    (0.47600000000000003, 3.4190047899305043),
    (0.47700000000000004, 3.4202721888410426),
    (0.47800000000000004, 3.4215422336738754),
    (0.47900000000000004, 3.4228150589399755),
    (0.48, 3.4240907983165467),
    (0.481, 3.4253695844371324),
    (0.482, 3.4266515486817215),
    (0.483, 3.427936820966853),
    (0.484, 3.4292255295357235),
    (0.485, 3.4305178007482864),
    (0.486, 3.431813758871363),
    (0.487, 3.433113525868747),
    (0.488, 3.4344172211913078),
    (0.489, 3.4357249615670984),
    (0.49, 3.437036860791459),
    (0.491, 3.438353029517122),
    (0.492, 3.4396735750443197),
    (0.493, 3.4409986011108873),
    (0.494, 3.442328207682369),
    (0.495, 3.4436624907421245),
    (0.496, 3.4450015420814313),
    (0.497, 3.446345449089595),
    (0.498, 3.4476942945440516),
    (0.499, 3.44904815640047),
    (0.5, 3.4504071075828637),
    (0.501, 3.4517712157736926),
    (0.502, 3.4531405432039675),
    (0.503, 3.4545151464433577),
    (0.504, 3.4558950761902962),
    (0.505, 3.4572803770620824),
    (0.506, 3.45867108738499),
    (0.507, 3.4600672389843727),
    (0.508, 3.4614688569747676),
    (0.509, 3.4628759595500016),
    (0.51, 3.4642885577732976),
    (0.511, 3.465706655234067),
    (0.512, 3.4671302464479),
    (0.513, 3.468559315571177),
    (0.514, 3.4699938366203593),
    (0.515, 3.471433773834131),
    (0.516, 3.4728790820355386),
    (0.517, 3.47432970699413),
    (0.518, 3.4757855857880946),
    (0.519, 3.477246647166405),
    (0.52, 3.4787128119109547),
    (0.521, 3.480183993198699),
    (0.522, 3.481660096963796),
    (0.523, 3.483141022259743),
    (0.524, 3.4846266616215225),
    (0.525, 3.486116901427733),
    (0.526, 3.4876116222627385),
    (0.527, 3.489110699278803),
    (0.528, 3.4906140025582326),
    (0.529, 3.492121397475513),
    (0.53, 3.4936327450594513),
    (0.531, 3.495147902355317),
    (0.532, 3.496666722786979),
    (0.533, 3.498189056519046),
    (0.534, 3.4997147508190087),
    (0.535, 3.5012436504193767),
    (0.536, 3.5027755978798245),
    (0.537, 3.5043104339493225),
    (0.538, 3.5058479979282855),
    (0.539, 3.507388128030702),
    (0.54, 3.5089306617462865),
    (0.541, 3.5104754362026123),
    (0.542, 3.512022288527252),
    (0.543, 3.5135710562099183),
    (0.544, 3.515121577464602),
    (0.545, 3.5166736915917163),
    (0.546, 3.5182272393402334),
    (0.547, 3.519782063269825),
    (0.548, 3.5213380081130032),
    (0.549, 3.522894921137257),
    (0.55, 3.524452652507197),
    (0.551, 3.5260110556466913),
    (0.552, 3.5275699876010087),
    (0.553, 3.5291293093989577),
    (0.554, 3.5306888864150228),
    (0.555, 3.5322485887315094),
    (0.556, 3.5338082908786506),
    (0.557, 3.535367865402317),
    (0.558, 3.5369271766286414),
    (0.559, 3.538486080756187),
    (0.56, 3.540044426576102),
    (0.561, 3.5416020561923016),
    (0.562, 3.54315880574162),
    (0.5630000000000001, 3.544714506113971),
    (0.5640000000000001, 3.5462689836725305),
    (0.5650000000000001, 3.5478220609738838),
    (0.5660000000000001, 3.5493735574881926),
    (0.5670000000000001, 3.55092329031937),
    (0.5680000000000001, 3.552471074925237),
    (0.5690000000000001, 3.5540167258376876),
    (0.5700000000000001, 3.5555600573828547),
    (0.5710000000000001, 3.557100884401275),
    (0.5720000000000001, 3.5586390229680553),
    (0.5730000000000001, 3.56017429111303),
    (0.5740000000000001, 3.561706509540935),
    (0.5750000000000001, 3.5632355023515627),
    (0.5760000000000001, 3.564761097759937),
    (0.577, 3.5662831288164707),
    (0.578, 3.567801434127133),
    (0.579, 3.5693158585736136),
    (0.58, 3.5708262540334834),
    (0.581, 3.5723324801003686),
    (0.582, 3.573834404804103),
    (0.583, 3.575331905330903),
    (0.584, 3.5768248687435267),
    (0.585, 3.578313192701443),
    (0.586, 3.57979678618099),
    (0.587, 3.5812755701955408),
    (0.588, 3.5827494785156766),
    (0.589, 3.584218458389339),
    (0.59, 3.585682471262003),
    (0.591, 3.5871414934968398),
    (0.592, 3.5885955165718944),
    (0.593, 3.5900445419403573),
    (0.594, 3.591488575448654),
    (0.595, 3.5929276267430375),
    (0.596, 3.5943617091857663),
    (0.597, 3.595790839771291),
    (0.598, 3.59721503904243),
    (0.599, 3.5986343310065427),
    (0.6, 3.600048743051726),
    (0.601, 3.6014583058629803),
    (0.602, 3.6028630533384005),
    (0.603, 3.604263022505346),
    (0.604, 3.6056582534366277),
    (0.605, 3.6070487891666883),
    (0.606, 3.608434675607777),
    (0.607, 3.60981596146614),
    (0.608, 3.611192698158189),
    (0.609, 3.6125649397266892),
    (0.61, 3.6139327427569357),
    (0.611, 3.6152961662929357),
    (0.612, 3.616655271753592),
    (0.613, 3.6180101228488732),
    (0.614, 3.6193607854960055),
    (0.615, 3.6207073277356487),
    (0.616, 3.6220498196480744),
    (0.617, 3.623388333269344),
    (0.618, 3.624722942507499),
    (0.619, 3.62605372305873),
    (0.62, 3.627380752323565),
    (0.621, 3.6287041093230448),
    (0.622, 3.6300238746149054),
    (0.623, 3.6313401302097583),
    (0.624, 3.632652959487272),
    (0.625, 3.6339624471123466),
    (0.626, 3.635268678951303),
    (0.627, 3.636571741988054),
    (0.628, 3.6378717242402923),
    (0.629, 3.639168714675664),
    (0.63, 3.640462803127956),
    (0.631, 3.6417540802132704),
    (0.632, 3.6430426372462104),
    (0.633, 3.6443285661560507),
    (0.634, 3.6456119594029284),
    (0.635, 3.6468929098940204),
    (0.636, 3.648171510899718),
    (0.637, 3.649447855969818),
    (0.638, 3.650722038849688),
    (0.639, 3.651994153396462),
    (0.64, 3.653264293495214),
    (0.641, 3.6545325529751325),
    (0.642, 3.6557990255257113),
    (0.643, 3.657063804612926),
    (0.644, 3.6583269833954075),
    (0.645, 3.6595886546406318),
    (0.646, 3.660848910641096),
    (0.647, 3.6621078431305016),
    (0.648, 3.6633655431999275),
    (0.649, 3.664622101214017),
    (0.65, 3.6658776067271566),
    (0.651, 3.6671321483996566),
    (0.652, 3.668385813913929),
    (0.653, 3.6696386898906685),
    (0.654, 3.670890861805037),
    (0.655, 3.6721424139028374),
    (0.656, 3.673393429116698),
    (0.657, 3.6746439889822535),
    (0.658, 3.6758941735543202),
    (0.659, 3.677144061323081),
    (0.66, 3.6783937291302635),
    (0.661, 3.6796432520853246),
    (0.662, 3.6808927034816223),
    (0.663, 3.6821421549984787),
    (0.664, 3.683391679748504),
    (0.665, 3.684641355269825),
    (0.666, 3.6858912636296135),
    (0.667, 3.6871414912400704),
    (0.668, 3.6883921286744092),
    (0.669, 3.6896432704828426),
    (0.67, 3.6908950150085644),
    (0.671, 3.692147464203739),
    (0.672, 3.6934007234454804),
    (0.673, 3.6946549013518384),
    (0.674, 3.695910109597786),
    (0.675, 3.697166462731202),
    (0.676, 3.6984240779888564),
    (0.677, 3.699683075112394),
    (0.678, 3.7009435761643186),
    (0.679, 3.7022057053439803),
    (0.68, 3.703469588803559),
    (0.681, 3.7047353544640442),
    (0.682, 3.706003131831231),
    (0.683, 3.7072730518116925),
    (0.684, 3.708545246528777),
    (0.685, 3.709819849138574),
    (0.686, 3.711096993645918),
    (0.687, 3.7123768147203675),
    (0.6880000000000001, 3.713659447512182),
    (0.6890000000000001, 3.714945027468318),
    (0.6900000000000001, 3.716233690148403),
    (0.6910000000000001, 3.717525571040726),
    (0.6920000000000001, 3.7188208053782237),
    (0.6930000000000001, 3.7201195279544628),
    (0.6940000000000001, 3.7214218729396222),
    (0.6950000000000001, 3.7227279736964833),
    (0.6960000000000001, 3.7240379625964097),
    (0.6970000000000001, 3.7253519708353333),
    (0.6980000000000001, 3.726670128249741),
    (0.6990000000000001, 3.7279925631326565),
    (0.7000000000000001, 3.7293194020496263),
    (0.7010000000000001, 3.730650769654705),
    (0.7020000000000001, 3.731986788506438),
    (0.7030000000000001, 3.733327578883848),
    (0.704, 3.734673258602421),
    (0.705, 3.7360239428300854),
    (0.706, 3.737379743903203),
    (0.707, 3.7387407711425498),
    (0.708, 3.740107130669302),
    (0.709, 3.741478925221022),
    (0.71, 3.74285625396764),
    (0.711, 3.7442392123274386),
    (0.712, 3.745627891783042),
    (0.713, 3.747022379697397),
    (0.714, 3.748422759129757),
    (0.715, 3.749829108651672),
    (0.716, 3.751241502162964),
    (0.717, 3.7526600087077204),
    (0.718, 3.7540846922902755),
    (0.719, 3.755515611691194),
    (0.72, 3.7569528202832556),
    (0.721, 3.75839636584744),
    (0.722, 3.759846290388917),
    (0.723, 3.761302629953021),
    (0.724, 3.762765414441245),
    (0.725, 3.7642346674272185),
    (0.726, 3.7657104059726985),
    (0.727, 3.7671926404435467),
    (0.728, 3.768681372795146),
    (0.729, 3.770176579954655),
    (0.73, 3.7716781988620864),
    (0.731, 3.7731861277214405),
    (0.732, 3.7747002288327263),
    (0.733, 3.776220331423949),
    (0.734, 3.777746234483115),
    (0.735, 3.7792777095902297),
    (0.736, 3.7808145037492995),
    (0.737, 3.7823563422203303),
    (0.738, 3.783902931351329),
    (0.739, 3.7854539614102984),
    (0.74, 3.7870091094172453),
    (0.741, 3.788568041976177),
    (0.742, 3.7901304181070983),
    (0.743, 3.7916958920780166),
    (0.744, 3.793264116236939),
    (0.745, 3.7948347438438668),
    (0.746, 3.7964074319028076),
    (0.747, 3.7979818439937683),
    (0.748, 3.799557653104754),
    (0.749, 3.801134544463771),
    (0.75, 3.802712218370826),
    (0.751, 3.804290393029924),
    (0.752, 3.8058688073810734),
    (0.753, 3.8074472223469167),
    (0.754, 3.809025405961176),
    (0.755, 3.8106031174035424),
    (0.756, 3.8121801062912013),
    (0.757, 3.8137561135225946),
    (0.758, 3.8153308721211605),
    (0.759, 3.8169041080790875),
    (0.76, 3.8184755412010682),
    (0.761, 3.820044885948038),
    (0.762, 3.8216118522809364),
    (0.763, 3.823176146504456),
    (0.764, 3.824737472110784),
    (0.765, 3.8262955306233577),
    (0.766, 3.827850022440619),
    (0.767, 3.8294006476797557),
    (0.768, 3.83094710702046),
    (0.769, 3.8324891025486685),
    (0.77, 3.834026338600321),
    (0.771, 3.8355585226051065),
    (0.772, 3.837085365930214),
    (0.773, 3.838606584724083),
    (0.774, 3.8401219007601526),
    (0.775, 3.841631042280614),
    (0.776, 3.843133744840153),
    (0.777, 3.8446297521497113),
    (0.778, 3.846118816920228),
    (0.779, 3.8476007017063933),
    (0.78, 3.849075179750394),
    (0.781, 3.8505420358256703),
    (0.782, 3.8520010670806633),
    (0.783, 3.8534520838825586),
    (0.784, 3.854894910661046),
    (0.785, 3.8563293867520674),
    (0.786, 3.8577553672415617),
    (0.787, 3.859172723809217),
    (0.788, 3.860581345572223),
    (0.789, 3.86198113992902),
    (0.79, 3.863372033403046),
    (0.791, 3.864753972486488),
    (0.792, 3.866126924484038),
    (0.793, 3.8674908778132258),
    (0.794, 3.868845836726601),
    (0.795, 3.8701918154390094),
    (0.796, 3.8715288373643064),
    (0.797, 3.8728569348774435),
    (0.798, 3.874176149076577),
    (0.799, 3.8754865295451504),
    (0.8, 3.8767881341139976),
    (0.801, 3.878081028623428),
    (0.802, 3.8793652866853305),
    (0.803, 3.880640989445262),
    (0.804, 3.8819082253445436),
    (0.805, 3.8831670898823614),
    (0.806, 3.8844176853778496),
    (0.807, 3.8856601207321937),
    (0.808, 3.8868945111907234),
    (0.809, 3.888120978105005),
    (0.81, 3.889339648694933),
    (0.811, 3.8905506558108396),
    (0.812, 3.89175413769557),
    (0.8130000000000001, 3.892950237746588),
    (0.8140000000000001, 3.8941391042780724),
    (0.8150000000000001, 3.8953208902830005),
    (0.8160000000000001, 3.896495753195256),
    (0.8170000000000001, 3.897663854651714),
    (0.8180000000000001, 3.8988253602543437),
    (0.8190000000000001, 3.899980439332293),
    (0.8200000000000001, 3.9011292647039904),
    (0.8210000000000001, 3.902272012439239),
    (0.8220000000000001, 3.903408861621311),
    (0.8230000000000001, 3.9045399941090415),
    (0.8240000000000001, 3.9056655942989185),
    (0.8250000000000001, 3.9067858488871843),
    (0.8260000000000001, 3.9079009466319308),
    (0.8270000000000001, 3.9090110781151868),
    (0.8280000000000001, 3.9101164355050195),
    (0.8290000000000001, 3.9112172123176245),
    (0.8300000000000001, 3.912313603179426),
    (0.8310000000000001, 3.913405803589164),
    (0.8320000000000001, 3.9144940096799954),
    (0.833, 3.9155784179815853),
    (0.834, 3.9166592251822014),
    (0.835, 3.917736627890811),
    (0.836, 3.9188108223991724),
    (0.837, 3.9198820044439358),
    (0.838, 3.920950368968728),
    (0.839, 3.922016109886255),
    (0.84, 3.923079419840393),
    (0.841, 3.9241404899682872),
    (0.842, 3.9251995096624404),
    (0.843, 3.9262566663328142),
    (0.844, 3.9273121451689113),
    (0.845, 3.928366128901888),
    (0.846, 3.9294187975666386),
    (0.847, 3.930470328263887),
    (0.848, 3.93152089492229),
    (0.849, 3.9325706680605226),
    (0.85, 3.9336198145493793),
    (0.851, 3.934668497373866),
    (0.852, 3.9357168753953014),
    (0.853, 3.936765103113398),
    (0.854, 3.9378133307266774),
    (0.855, 3.9388617072045187),
    (0.856, 3.9399103834772724),
    (0.857, 3.940959512707721),
    (0.858, 3.9420092502678488),
    (0.859, 3.9430597537155676),
    (0.86, 3.944111182771471),
    (0.861, 3.945163699295578),
    (0.862, 3.946217467264078),
    (0.863, 3.9472726527460775),
    (0.864, 3.9483294238803452),
    (0.865, 3.949387950852055),
    (0.866, 3.950448405869536),
    (0.867, 3.951510963141014),
    (0.868, 3.9525757988513552),
    (0.869, 3.9536430911388143),
    (0.87, 3.9547130200717877),
    (0.871, 3.9557857676255423),
    (0.872, 3.9568615176589734),
    (0.873, 3.957940455891346),
    (0.874, 3.9590227698790397),
    (0.875, 3.9601086489922968),
    (0.876, 3.9611982843919646),
    (0.877, 3.9622918690062403),
    (0.878, 3.963389597507419),
    (0.879, 3.9644916662886405),
    (0.88, 3.965598273440632),
    (0.881, 3.966709618728446),
    (0.882, 3.967825903568227),
    (0.883, 3.968947331003929),
    (0.884, 3.9700741056840867),
    (0.885, 3.9712064338385424),
    (0.886, 3.9723445232551993),
    (0.887, 3.973488583256768),
    (0.888, 3.974638824677511),
    (0.889, 3.975795459839981),
    (0.89, 3.976958702531777),
    (0.891, 3.978128767982284),
    (0.892, 3.979305872839419),
    (0.893, 3.9804902351463753),
    (0.894, 3.9816820743183703),
    (0.895, 3.982881611119389),
    (0.896, 3.984089067638932),
    (0.897, 3.985304667268757),
    (0.898, 3.9865286346796243),
    (0.899, 3.9877611957980443),
    (0.9, 3.9890025777830305),
    (0.901, 3.9902530090028243),
    (0.902, 3.9915127190116655),
    (0.903, 3.9927819385265124),
    (0.904, 3.994060899403812),
    (0.905, 3.995349834616227),
    (0.906, 3.996648978229385),
    (0.907, 3.9979585653786325),
    (0.908, 3.999278832245771),
    (0.909, 4.000610016035808),
    (0.91, 4.001952354953696),
    (0.911, 4.003306088181082),
    (0.912, 4.0046714558530585),
    (0.913, 4.006048699034895),
    (0.914, 4.007438059698796),
    (0.915, 4.00883978070064),
    (0.916, 4.010254105756729),
    (0.917, 4.011681279420531),
    (0.918, 4.013121547059425),
    (0.919, 4.014575154831446),
    (0.92, 4.016042349662033),
    (0.921, 4.017523379220774),
    (0.922, 4.019018491898145),
    (0.923, 4.020527936782271),
    (0.924, 4.0220519636356515),
    (0.925, 4.023590822871923),
    (0.926, 4.025144765532589),
    (0.927, 4.026714043263779),
    (0.928, 4.028298908292986),
    (0.929, 4.029899613405813),
    (0.93, 4.031516411922722),
    (0.931, 4.033149557675777),
    (0.932, 4.034799304985389),
    (0.933, 4.036465908637056),
    (0.934, 4.038149623858121),
    (0.935, 4.039850706294505),
    (0.936, 4.0415694119874646),
    (0.937, 4.043305997350322),
    (0.9380000000000001, 4.045060719145224),
    (0.9390000000000001, 4.046833834459881),
    (0.9400000000000001, 4.048625600684311),
    (0.9410000000000001, 4.050436275487593),
    (0.9420000000000001, 4.052266116794604),
    (0.9430000000000001, 4.054115382762764),
    (0.9440000000000001, 4.055984331758788),
    (0.9450000000000001, 4.057873222335428),
    (0.9460000000000001, 4.059782313208219),
    (0.9470000000000001, 4.061711863232226),
    (0.9480000000000001, 4.063662131378776),
    (0.9490000000000001, 4.065633376712226),
    (0.9500000000000001, 4.0676258583666955),
    (0.9510000000000001, 4.069639835522809),
    (0.9520000000000001, 4.071675567384447),
    (0.9530000000000001, 4.073733313155492),
    (0.9540000000000001, 4.075813332016569),
    (0.9550000000000001, 4.077915883101797),
    (0.9560000000000001, 4.0800412254755285),
    (0.9570000000000001, 4.082189618109096),
    (0.9580000000000001, 4.084361319857565),
    (0.9590000000000001, 4.0865565894364675),
    (0.96, 4.088775685398557),
    (0.961, 4.091018866110544),
    (0.962, 4.093286389729858),
    (0.963, 4.095578514181369),
    (0.964, 4.097895497134157),
    (0.965, 4.10023759597824),
    (0.966, 4.102605067801329),
    (0.967, 4.104998169365569),
    (0.968, 4.107417157084288),
    (0.969, 4.109862286998735),
    (0.97, 4.112333814754835),
    (0.971, 4.114831995579927),
    (0.972, 4.117357084259514),
    (0.973, 4.1199093351140075),
    (0.974, 4.122489001975469),
    (0.975, 4.12509633816436),
    (0.976, 4.127731596466284),
    (0.977, 4.130395029108733),
    (0.978, 4.133086887737839),
    (0.979, 4.135807423395105),
    (0.98, 4.1385568864941655),
    (0.981, 4.141335526797526),
    (0.982, 4.144143593393304),
    (0.983, 4.14698133467198),
    (0.984, 4.149848998303139),
    (0.985, 4.152746831212221),
    (0.986, 4.155675079557263),
    (0.987, 4.15863398870564),
    (0.988, 4.161623803210825),
    (0.989, 4.164644766789116),
    (0.99, 4.167697122296392),
    (0.991, 4.1707811117048585),
    (0.992, 4.173896976079785),
    (0.993, 4.177044955556265),
    (0.994, 4.180225289315943),
    (0.995, 4.183438215563774),
    (0.996, 4.186683971504764),
    (0.997, 4.189962793320716),
    (0.998, 4.193274916146973),
    (0.999, 4.196620574049167),
    (1.0, 4.2),
];
