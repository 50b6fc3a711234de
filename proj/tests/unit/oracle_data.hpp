// Generated by tests/oracle/freeze_oracles.py; do not edit.
#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace oracle {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct BucketCase { std::int64_t epoch; int year; unsigned month; };
inline const BucketCase kBucketCases[] = {
    {0, 1970, 1},
    {59, 1970, 1},
    {1136073599, 2005, 12},
    {1136073600, 2006, 1},
    {951782400, 2000, 2},
    {951868799, 2000, 2},
    {1709251199, 2024, 2},
    {4102444800, 2100, 1},
    {253402300799, 9999, 12},
};

struct PunycodeCase { const char* utf8; const char* encoded; };
inline const PunycodeCase kPunycodeCases[] = {
    {"bücher", "bcher-kva"},
    {"münchen", "mnchen-3ya"},
    {"中国", "fiqs8s"},
    {"пример", "e1afmkfd"},
    {"ελληνικά", "hxargifdar"},
    {"mañana", "maana-pta"},
    {"ü", "tda"},
    {"aü", "a-eha"},
    {"üa", "a-dha"},
    {"中文abc", "abc-u68do18h"},
    {"☃", "n3h"},
    {"𝔘𝔫𝔦", "p61h2ao"},
};

struct PslCase { const char* host; bool icann_only; const char* suffix; const char* registrable; };
inline const PslCase kPslCases[] = {
    {"example.com", true, "com", "example.com"},
    {"www.example.co.uk", true, "co.uk", "example.co.uk"},
    {"a.b.c.example.co.uk", true, "co.uk", "example.co.uk"},
    {"co.uk", true, "co.uk", nullptr},
    {"uk", true, "uk", nullptr},
    {"city.kawasaki.jp", true, "kawasaki.jp", "city.kawasaki.jp"},
    {"foo.city.kawasaki.jp", true, "kawasaki.jp", "city.kawasaki.jp"},
    {"x.y.kawasaki.jp", true, "y.kawasaki.jp", "x.y.kawasaki.jp"},
    {"y.kawasaki.jp", true, "y.kawasaki.jp", nullptr},
    {"www.ck", true, "ck", "www.ck"},
    {"a.b.ck", true, "b.ck", "a.b.ck"},
    {"b.ck", true, "b.ck", nullptr},
    {"github.io", true, "io", "github.io"},
    {"user.github.io", true, "io", "github.io"},
    {"deep.user.github.io", true, "io", "github.io"},
    {"foo.bar.unknowntld", true, "unknowntld", "bar.unknowntld"},
    {"unknowntld", true, "unknowntld", nullptr},
    {"xn--bcher-kva.de", true, "de", "xn--bcher-kva.de"},
    {"s3.amazonaws.com", true, "com", "amazonaws.com"},
    {"bucket.s3.amazonaws.com", true, "com", "amazonaws.com"},
    {"blogspot.com", true, "com", "blogspot.com"},
    {"x.blogspot.com", true, "com", "blogspot.com"},
    {"xn--85x722f.xn--55qx5d.cn", true, "xn--55qx5d.cn", "xn--85x722f.xn--55qx5d.cn"},
    {"a.xn--55qx5d.cn", true, "xn--55qx5d.cn", "a.xn--55qx5d.cn"},
    {"sub.example.com.au", true, "com.au", "example.com.au"},
    {"com.au", true, "com.au", nullptr},
    {"appspot.com", true, "com", "appspot.com"},
    {"my.app.appspot.com", true, "com", "appspot.com"},
    {"test.k12.ak.us", true, "k12.ak.us", "test.k12.ak.us"},
    {"k12.ak.us", true, "k12.ak.us", nullptr},
    {"foo.bd", true, "bd", "foo.bd"},
    {"a.foo.bd", true, "bd", "foo.bd"},
    {"example.com", false, "com", "example.com"},
    {"www.example.co.uk", false, "co.uk", "example.co.uk"},
    {"a.b.c.example.co.uk", false, "co.uk", "example.co.uk"},
    {"co.uk", false, "co.uk", nullptr},
    {"uk", false, "uk", nullptr},
    {"city.kawasaki.jp", false, "kawasaki.jp", "city.kawasaki.jp"},
    {"foo.city.kawasaki.jp", false, "kawasaki.jp", "city.kawasaki.jp"},
    {"x.y.kawasaki.jp", false, "y.kawasaki.jp", "x.y.kawasaki.jp"},
    {"y.kawasaki.jp", false, "y.kawasaki.jp", nullptr},
    {"www.ck", false, "ck", "www.ck"},
    {"a.b.ck", false, "b.ck", "a.b.ck"},
    {"b.ck", false, "b.ck", nullptr},
    {"github.io", false, "github.io", nullptr},
    {"user.github.io", false, "github.io", "user.github.io"},
    {"deep.user.github.io", false, "github.io", "user.github.io"},
    {"foo.bar.unknowntld", false, "unknowntld", "bar.unknowntld"},
    {"unknowntld", false, "unknowntld", nullptr},
    {"xn--bcher-kva.de", false, "de", "xn--bcher-kva.de"},
    {"s3.amazonaws.com", false, "s3.amazonaws.com", nullptr},
    {"bucket.s3.amazonaws.com", false, "s3.amazonaws.com", "bucket.s3.amazonaws.com"},
    {"blogspot.com", false, "blogspot.com", nullptr},
    {"x.blogspot.com", false, "blogspot.com", "x.blogspot.com"},
    {"xn--85x722f.xn--55qx5d.cn", false, "xn--55qx5d.cn", "xn--85x722f.xn--55qx5d.cn"},
    {"a.xn--55qx5d.cn", false, "xn--55qx5d.cn", "a.xn--55qx5d.cn"},
    {"sub.example.com.au", false, "com.au", "example.com.au"},
    {"com.au", false, "com.au", nullptr},
    {"appspot.com", false, "appspot.com", nullptr},
    {"my.app.appspot.com", false, "appspot.com", "app.appspot.com"},
    {"test.k12.ak.us", false, "k12.ak.us", "test.k12.ak.us"},
    {"k12.ak.us", false, "k12.ak.us", nullptr},
    {"foo.bd", false, "bd", "foo.bd"},
    {"a.foo.bd", false, "bd", "foo.bd"},
};

struct MomentCase { std::vector<std::uint64_t> counts; double skewness; double excess_kurtosis; };
inline const MomentCase kMomentCases[] = {
    {{1, 1, 1, 5}, 1.1547005383792515, -0.6666666666666665},
    {{7, 3, 3, 1, 1, 1, 12, 2, 5}, 1.3156592907423799, 0.6601696050760499},
};

struct ZetaCase { double s; double q; double value; };
inline const ZetaCase kZetaCases[] = {
    {1.05, 1.0, 20.580844302036986},
    {1.05, 1.5, 19.961878268159396},
    {1.05, 5.0, 18.549100948810306},
    {1.05, 50.5, 16.446788798634508},
    {1.05, 1000.0, 14.159269722520182},
    {1.5, 1.0, 2.612375348685488},
    {1.5, 1.5, 1.9481108228086432},
    {1.5, 5.0, 0.9413718683623393},
    {1.5, 50.5, 0.282839177301538},
    {1.5, 1000.0, 0.06326136854451493},
    {2.5, 1.0, 1.341487257250917},
    {2.5, 1.5, 0.5902563850764313},
    {2.5, 5.0, 0.06931053204432187},
    {2.5, 50.5, 0.0018855002536809164},
    {2.5, 1000.0, 2.1097669044166766e-05},
    {3.7, 1.0, 1.1062882414646793},
    {3.7, 1.5, 0.27503781988213555},
    {3.7, 5.0, 0.006255649393728905},
    {3.7, 50.5, 9.579546076561014e-06},
    {3.7, 1000.0, 2.945930515255994e-09},
    {8.0, 1.0, 1.0040773561979444},
    {8.0, 1.5, 0.039725830475806544},
    {8.0, 5.0, 3.4316186059667983e-06},
    {8.0, 50.5, 1.8268665514152284e-13},
    {8.0, 1000.0, 1.4335780952280953e-22},
};

inline const std::vector<double> kLognormalSample = {5.0, 5.0, 6.0, 6.0, 6.0, 7.0, 8.0, 9.0, 9.0, 11.0, 12.0, 14.0, 15.0, 18.0, 22.0, 25.0, 31.0, 40.0, 57.0, 80.0, 130.0, 210.0};
inline constexpr double kLognormalLower = 4.5;
inline constexpr double kLognormalMu = 0.776761684491426;
inline constexpr double kLognormalSigma = 1.955447120428296;
inline constexpr double kLognormalLoglik = -89.68188508504474;

struct MacKinnonPCase { double tau; int regression; int n; double p; };
inline const MacKinnonPCase kMacKinnonP[] = {
    {-25.0, 0, 1, 0.0},
    {-6.0, 0, 1, 9.408280965923412e-09},
    {-4.1, 0, 1, 4.9236836526022444e-05},
    {-3.3, 0, 1, 0.0009792361718158815},
    {-2.9, 0, 1, 0.003659953608501506},
    {-2.0, 0, 1, 0.043520623056049056},
    {-1.2, 0, 1, 0.21065062522170191},
    {-0.5, 0, 1, 0.49612403751838097},
    {0.3, 0, 1, 0.774864913118131},
    {1.0, 0, 1, 0.9159517564141868},
    {3.0, 0, 1, 0.9998068584192428},
    {-25.0, 0, 2, 0.0},
    {-6.0, 0, 2, 1.4509598233686578e-07},
    {-4.1, 0, 2, 0.0007499388737028751},
    {-3.3, 0, 2, 0.01144536597511078},
    {-2.9, 0, 2, 0.03525876242742536},
    {-2.0, 0, 2, 0.2366216480043815},
    {-1.2, 0, 2, 0.6136559997276364},
    {-0.5, 0, 2, 0.8603778739506307},
    {0.3, 0, 2, 0.9636641613119163},
    {1.0, 0, 2, 0.9850627752780936},
    {3.0, 0, 2, 1.0},
    {-25.0, 1, 1, 0.0},
    {-6.0, 1, 1, 1.6661204834054382e-07},
    {-4.1, 1, 1, 0.0009685244993083539},
    {-3.3, 1, 1, 0.014878474492290718},
    {-2.9, 1, 1, 0.04534799747216563},
    {-2.0, 1, 1, 0.28657309916843154},
    {-1.2, 1, 1, 0.6735957119322298},
    {-0.5, 1, 1, 0.8920164965835715},
    {0.3, 1, 1, 0.9773444863945506},
    {1.0, 1, 1, 0.9942659485477608},
    {3.0, 1, 1, 1.0},
    {-25.0, 1, 2, 0.0},
    {-6.0, 1, 2, 1.6234924812268292e-06},
    {-4.1, 1, 2, 0.005144694218970909},
    {-3.3, 1, 2, 0.05473481458507781},
    {-2.9, 1, 2, 0.1359286072025805},
    {-2.0, 1, 2, 0.5285780802451076},
    {-1.2, 1, 2, 0.8579009538174471},
    {-0.5, 1, 2, 0.9643315724544752},
    {0.3, 1, 2, 0.9908911300431866},
    {1.0, 1, 2, 1.0},
    {3.0, 1, 2, 1.0},
    {-25.0, 2, 1, 0.0},
    {-6.0, 2, 1, 2.1968599946249723e-06},
    {-4.1, 2, 1, 0.006306812383570351},
    {-3.3, 2, 1, 0.0662524967763319},
    {-2.9, 2, 1, 0.16221506199000135},
    {-2.0, 2, 1, 0.6014337722402741},
    {-1.2, 2, 1, 0.9105028580536317},
    {-0.5, 2, 1, 0.9834338169504677},
    {0.3, 2, 1, 0.996266589084324},
    {1.0, 2, 1, 1.0},
    {3.0, 2, 1, 1.0},
    {-25.0, 2, 2, 0.0},
    {-6.0, 2, 2, 9.570944225737447e-06},
    {-4.1, 2, 2, 0.020452132126065902},
    {-3.3, 2, 2, 0.15226879793092274},
    {-2.9, 2, 2, 0.30924172330026745},
    {-2.0, 2, 2, 0.7716464508695638},
    {-1.2, 2, 2, 0.9624073392992909},
    {-0.5, 2, 2, 0.9938132045849292},
    {0.3, 2, 2, 0.9985293376439461},
    {1.0, 2, 2, 1.0},
    {3.0, 2, 2, 1.0},
};
struct MacKinnonCritCase { int regression; int n; double nobs; double c1, c5, c10; };
inline const MacKinnonCritCase kMacKinnonCrit[] = {
    {0, 1, 25, -2.6609751999999998, -1.955129728, -1.6089151039999998},
    {0, 1, 100, -2.5884606999999997, -1.943991277, -1.614410036},
    {0, 1, 500, -2.570226108, -1.9415504102160002, -1.616299453088},
    {1, 1, 25, -3.7238633119999998, -2.98648896, -2.6328004},
    {1, 1, 100, -3.497501033, -2.89090644, -2.5824349},
    {1, 1, 500, -3.443496379464, -2.8673378563200003, -2.569858036},
    {1, 2, 25, -4.3881592000000005, -3.5914507999999996, -3.21845},
    {1, 2, 100, -4.0093117000000005, -3.3979133, -3.087134},
    {1, 2, 500, -3.9184779080000003, -3.348377492, -3.05294328},
    {2, 1, 25, -4.3749647199999995, -3.6034675359999997, -3.23818632},
    {2, 1, 100, -4.052277955, -3.4553429739999997, -3.1533208800000003},
    {2, 1, 500, -3.97699098524, -3.4193073069919997, -3.1322370790400003},
    {2, 2, 25, -5.0022544, -4.1803124, -3.790229712},
    {2, 2, 100, -4.4855749, -3.8768834, -3.567856908},
    {2, 2, 500, -4.358640115999999, -3.799639496, -3.5105029768639997},
};

inline constexpr std::size_t kEconCommonMonths = 118;
struct AdfCase { const char* series; int regression; bool autolag; int max_lag; double stat; double p; int lags; std::size_t nobs; double c1, c5, c10; };
inline const AdfCase kAdfCases[] = {
    {"attention", 0, true, 12, -0.21447327955062118, 0.6085337702918804, 4, 115, -2.5854559924385634, -1.9435695648886333, -1.6146989749321936},
    {"attention", 0, false, 3, -0.2794304544112749, 0.5839803762009743, 3, 116, -2.585283683115339, -1.9435455883031285, -1.6147157895977695},
    {"attention", 1, true, 12, -6.607120378902127, 6.514450792691638e-09, 0, 119, -3.4865346059036564, -2.8861509858476264, -2.579896092790057},
    {"attention", 1, false, 3, -4.479525575571546, 0.00021408681875809547, 3, 116, -3.4880216384691867, -2.8867966864160075, -2.5802408234244947},
    {"attention", 2, true, 12, -6.653282296015153, 8.463979476500779e-08, 0, 119, -4.036933565633866, -3.4480491338265407, -3.1490681814297643},
    {"attention", 2, false, 3, -4.614511546247803, 0.0009748350044386897, 3, 116, -4.039012576443273, -3.44903886706097, -3.149645684529911},
    {"value_common", 0, true, 12, 2.676472670247048, 0.9990844007856534, 2, 115, -2.5854559924385634, -1.9435695648886333, -1.6146989749321936},
    {"value_common", 0, false, 3, 2.838459465934259, 0.9995619594428905, 3, 114, -2.5856313665743307, -1.9435939915385572, -1.6146818889482863},
    {"value_common", 1, true, 12, -1.9085394288561377, 0.32805461929658575, 3, 114, -3.489057523907491, -2.887246327182993, -2.5804808802708528},
    {"value_common", 1, false, 3, -1.9085394288561377, 0.32805461929658575, 3, 114, -3.489057523907491, -2.887246327182993, -2.5804808802708528},
    {"value_common", 2, true, 12, -1.85662460836779, 0.6768361239776469, 2, 115, -4.039730383003206, -3.4493804768636473, -3.1498449798635657},
    {"value_common", 2, false, 3, -1.5525608753823958, 0.8104576086806794, 3, 114, -4.0404611509884285, -3.449728197718056, -3.1500478236218434},
    {"value_common_diff", 0, true, 12, -12.178758578057893, 3.2727176938458163e-22, 0, 116, -2.585283683115339, -1.9435455883031285, -1.6147157895977695},
    {"value_common_diff", 0, false, 3, -5.650420924360511, 5.126470673760948e-08, 3, 113, -2.585809888010024, -1.943618880904181, -1.6146645250076754},
    {"value_common_diff", 1, true, 12, -9.853806005710846, 4.413730815206782e-17, 1, 115, -3.4885349695076844, -2.887019521656941, -2.5803597920604915},
    {"value_common_diff", 1, false, 3, -6.964972424214487, 8.963466538175379e-10, 3, 113, -3.489589552580676, -2.887477210140433, -2.580604145195395},
    {"value_common_diff", 2, true, 12, -8.351561203215256, 1.1017735999422022e-11, 2, 114, -4.0404611509884285, -3.449728197718056, -3.1500478236218434},
    {"value_common_diff", 2, false, 3, -7.29244395115143, 3.051549664602984e-09, 3, 113, -4.0412052347395555, -3.450082195146292, -3.15025431146506},
};
inline constexpr int kCointMaxLag = 12;
inline constexpr double kCointStat = -1.42090104522191;
inline constexpr double kCointP = 0.7902591797336913;
inline constexpr double kCointCrit[3] = {-3.992495175688509, -3.388851506318942, -3.080898272335452};
struct GrangerCase { int lag; double f; double p; int df_den; };
inline const GrangerCase kGrangerCases[] = {
    {1, 1.5884990099927396, 0.2101371455334053, 113},
    {2, 5.746990378098043, 0.004227521014561513, 110},
    {3, 13.512022664261423, 1.532040052922237e-07, 107},
    {4, 56.36951328030401, 3.3271542702549483e-25, 104},
    {5, 45.07021041796828, 3.0815622511348496e-24, 101},
    {6, 36.11637532277875, 9.173652936312398e-23, 98},
    {7, 30.05970830635329, 1.676170380585906e-21, 95},
    {8, 25.782292754007347, 1.9963586309938018e-20, 92},
    {9, 23.35315419081741, 6.679825206477859e-20, 89},
    {10, 20.33922075496293, 9.8864739853779e-19, 86},
    {11, 18.3051243624156, 6.886676980084505e-18, 83},
    {12, 16.70012285008883, 3.9030856307981347e-17, 80},
};
struct VarCase { int lag; bool common; double aic; double c0, a11, a12, a21, a22; };
inline const VarCase kVarCases[] = {
    {0, false, 42.45852783201446, 195.09948717948726, 0.0, 0.0, 0.0, 0.0},
    {0, true, 42.55119018577136, 193.76295238095247, 0.0, 0.0, 0.0, 0.0},
    {1, false, 42.23136530427112, 104.1124771126917, 0.4699805178362628, -2.7153875011986743e-08, 276041.807232285, -0.18774775113226427},
    {1, true, 42.332498370339266, 105.5645188563113, 0.4568128583231339, -3.54358421825404e-08, 294728.737767541, -0.1886732956972628},
    {2, false, 42.17123128135521, 98.37566802579336, 0.4543089578567475, -1.871541780410748e-08, -93907.1683650731, -0.2538787635556216},
    {2, true, 42.275464574041685, 98.37864761920864, 0.4386044650643572, -2.8562524476964365e-08, -65045.78594698312, -0.25285462212760024},
    {3, false, 42.00163930562021, 105.8342846825785, 0.4565187558171091, -8.449723355900398e-09, -81478.24178098365, -0.40230343888378234},
    {3, true, 42.115286747778754, 106.9537136679879, 0.44099285749463313, -1.88993719879545e-08, -70675.36535761462, -0.39462623557196785},
    {4, false, 41.22017667971572, 113.77214035350748, 0.4398948727818426, 2.075168511566492e-09, -223247.68700528244, -0.09062577836482752},
    {4, true, 41.29940650422888, 119.24187387269313, 0.4326684628463725, -3.810710254603078e-10, -217678.60145797156, -0.08710861986093332},
    {5, false, 41.28136270131829, 111.37013074821603, 0.4404215702444901, 2.4488708591018216e-08, -218567.956667045, -0.18565989380859382},
    {5, true, 41.34758871793941, 116.47420122358018, 0.4323064734199731, 1.9641230198030563e-08, -234768.45456807973, -0.20272693663581184},
    {6, false, 41.32673090331988, 92.22771648760437, 0.43003335222378897, 3.947151579318019e-08, -214169.1601376554, -0.18786354786449425},
    {6, true, 41.37763804943637, 96.72976330761159, 0.4232775110527883, 3.942788050691991e-08, -227920.73498458258, -0.2011546257681462},
    {7, false, 41.392045496926514, 102.51676256723073, 0.4456174542492642, 4.899073857727485e-08, -229539.07225837273, -0.19360811425197183},
    {7, true, 41.430521447071726, 108.91408525866765, 0.43923981628821035, 4.464128279856006e-08, -241774.6113589836, -0.20475972881768725},
    {8, false, 41.438930167219496, 117.98218416072055, 0.4284618199133673, 5.722760986794085e-08, -228226.97582142404, -0.1897004661606166},
    {8, true, 41.4611709945364, 126.33410408984685, 0.4287248295454111, 5.443584217377578e-08, -241094.40242669272, -0.19955124974382082},
    {9, false, 41.493173089701656, 124.9482994144353, 0.4237858798919406, 5.420311142799332e-08, -272065.5725577213, -0.19498180104640625},
    {9, true, 41.50972975274438, 131.84088360469494, 0.4214534215118681, 5.259471625153114e-08, -268536.30033490626, -0.20160397346935965},
    {10, false, 41.56563985096066, 120.43448728831792, 0.4242189922701544, 6.017330027069619e-08, -263231.192772868, -0.19645512355011724},
    {10, true, 41.567732889773445, 124.96034086658719, 0.42225073123608925, 6.14319053708567e-08, -265024.59086164413, -0.19417586142729207},
    {11, false, 41.599328475245635, 90.96469249955155, 0.4143043246081342, 5.366996602122726e-08, -241618.5686588332, -0.1900810461577595},
    {11, true, 41.56659954020618, 93.24674207536391, 0.4150367852554906, 5.4809429846743896e-08, -240915.93954616893, -0.18898799117957815},
    {12, false, 41.62654678981108, 85.0984004208221, 0.3982384308091768, 6.285720338732565e-08, -217788.08751868756, -0.20108157282161396},
    {12, true, 41.62654678981108, 85.0984004208221, 0.3982384308091768, 6.285720338732565e-08, -217788.08751868756, -0.20108157282161396},
};

}  // namespace oracle
