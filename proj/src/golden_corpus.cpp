#include "edgeshadow/goldens.hpp"

// Embedded reference corpus in DSL form. Generated by offline
// transcription of the source tables; frozen data, do not edit by hand.

namespace edgeshadow {
namespace {

const char k_crack_primal[] = R"CORPUS(
# crack primal reference tables (161 entries)

# j = 1
[crack primal j=1 h=0 f=0]
1 sin 1/2
[crack primal j=1 h=0 f=1]
1/4 sin 1/2
[crack primal j=1 h=0 f=2]
1/12 sin 1/2 ; -3/32 sin 3/2
[crack primal j=1 h=0 f=3]
1/16 sin 1/2 ; -1/30 sin 3/2 ; 5/128 sin 5/2
[crack primal j=1 h=0 f=4]
3/80 sin 1/2 ; -5/128 sin 3/2 ; 1/70 sin 5/2 ; -35/2048 sin 7/2
[crack primal j=1 h=0 f=5]
1/32 sin 1/2 ; -3/140 sin 3/2 ; 35/1536 sin 5/2 ; -2/315 sin 7/2 ; 63/8192 sin 9/2
[crack primal j=1 h=0 f=6]
5/224 sin 1/2 ; -35/1536 sin 3/2 ; 1/84 sin 5/2 ; -105/8192 sin 7/2 ; 2/693 sin 9/2 ; -231/65536 sin 11/2
[crack primal j=1 h=0 f=7]
5/256 sin 1/2 ; -5/336 sin 3/2 ; 63/4096 sin 5/2 ; -1/154 sin 7/2 ; 231/32768 sin 9/2 ; -4/3003 sin 11/2 ; 429/262144 sin 13/2
[crack primal j=1 h=0 f=8]
35/2304 sin 1/2 ; -63/4096 sin 3/2 ; 5/528 sin 5/2 ; -1617/163840 sin 7/2 ; 1/286 sin 9/2 ; -1001/262144 sin 11/2 ; 4/6435 sin 13/2 ; -6435/8388608 sin 15/2
[crack primal j=1 h=0 f=9]
7/512 sin 1/2 ; -35/3168 sin 3/2 ; 231/20480 sin 5/2 ; -5/858 sin 7/2 ; 1001/163840 sin 9/2 ; -4/2145 sin 11/2 ; 2145/1048576 sin 13/2 ; -32/109395 sin 15/2 ; 12155/33554432 sin 17/2
[crack primal j=1 h=0 f=10]
63/5632 sin 1/2 ; -231/20480 sin 3/2 ; 35/4576 sin 5/2 ; -1287/163840 sin 7/2 ; 1/286 sin 9/2 ; -3861/1048576 sin 11/2 ; 12/12155 sin 13/2 ; -36465/33554432 sin 15/2 ; 32/230945 sin 17/2 ; -46189/268435456 sin 19/2
[crack primal j=1 h=2 f=0]
-1/6 sin 1/2
[crack primal j=1 h=2 f=1]
-1/8 sin 1/2 ; 7/60 sin 3/2
[crack primal j=1 h=2 f=2]
-31/240 sin 1/2 ; 5/64 sin 3/2 ; -19/280 sin 5/2
[crack primal j=1 h=2 f=3]
-41/384 sin 1/2 ; 111/1120 sin 3/2 ; -35/768 sin 5/2 ; 187/5040 sin 7/2
[crack primal j=1 h=2 f=4]
-8209/80640 sin 1/2 ; 119/1536 sin 3/2 ; -271/4032 sin 5/2 ; 105/4096 sin 7/2 ; -437/22176 sin 9/2
[crack primal j=1 h=2 f=5]
-4069/46080 sin 1/2 ; 39899/483840 sin 3/2 ; -427/8192 sin 5/2 ; 1259/29568 sin 7/2 ; -231/16384 sin 9/2 ; 1979/192192 sin 11/2
[crack primal j=1 h=2 f=6]
-483047/5806080 sin 1/2 ; 5663/81920 sin 3/2 ; -18467/304128 sin 5/2 ; 5467/163840 sin 7/2 ; -2837/109824 sin 9/2 ; 1001/131072 sin 11/2 ; -4387/823680 sin 13/2
[crack primal j=1 h=2 f=7]
-153325/2064384 sin 1/2 ; 8920073/127733760 sin 3/2 ; -49621/983040 sin 5/2 ; 331871/7907328 sin 7/2 ; -27027/1310720 sin 9/2 ; 50111/3294720 sin 11/2 ; -2145/524288 sin 13/2 ; 76627/28005120 sin 15/2
[crack primal j=1 h=2 f=8]
-79481719/1135411200 sin 1/2 ; 2514853/41287680 sin 3/2 ; -6664667/123002880 sin 5/2 ; 275561/7864320 sin 7/2 ; -81201/2928640 sin 9/2 ; 13013/1048576 sin 11/2 ; -327121/37340160 sin 13/2 ; 36465/16777216 sin 15/2 ; -165409/118243840 sin 17/2
[crack primal j=1 h=4 f=0]
1/120 sin 1/2
[crack primal j=1 h=4 f=1]
1/96 sin 1/2 ; -3/280 sin 3/2
[crack primal j=1 h=4 f=2]
17/1008 sin 1/2 ; -7/768 sin 3/2 ; 19/2016 sin 5/2
[crack primal j=1 h=4 f=3]
41/2304 sin 1/2 ; -433/24192 sin 3/2 ; 7/1024 sin 5/2 ; -13/1848 sin 7/2
[crack primal j=1 h=4 f=4]
1019/46080 sin 1/2 ; -1/64 sin 3/2 ; 595/38016 sin 5/2 ; -77/16384 sin 7/2 ; 263/54912 sin 9/2
[crack primal j=1 h=4 f=5]
1367/61440 sin 1/2 ; -5617/253440 sin 3/2 ; 605/49152 sin 5/2 ; -24155/1976832 sin 7/2 ; 1001/327680 sin 9/2 ; -2533/823680 sin 11/2
[crack primal j=1 h=4 f=6]
3211069/127733760 sin 1/2 ; -58267/2949120 sin 3/2 ; 514259/26357760 sin 5/2 ; -4433/491520 sin 7/2 ; 81/9152 sin 9/2 ; -1001/524288 sin 11/2 ; 35401/18670080 sin 13/2
[crack primal j=1 h=6 f=0]
-1/5040 sin 1/2
[crack primal j=1 h=6 f=1]
-1/2880 sin 1/2 ; 11/30240 sin 3/2
[crack primal j=1 h=6 f=2]
-13/17280 sin 1/2 ; 1/2560 sin 3/2 ; -1/2376 sin 5/2
[crack primal j=1 h=6 f=3]
-1/1024 sin 1/2 ; 191/190080 sin 3/2 ; -11/30720 sin 5/2 ; 97/247104 sin 7/2
[crack primal j=1 h=6 f=4]
-511/345600 sin 1/2 ; 187/184320 sin 3/2 ; -1751/1647360 sin 5/2 ; 143/491520 sin 7/2 ; -59/183040 sin 9/2
[crack primal j=1 h=8 f=0]
1/362880 sin 1/2
[crack primal j=1 h=8 f=1]
1/161280 sin 1/2 ; -13/1995840 sin 3/2
[crack primal j=1 h=8 f=2]
89/5322240 sin 1/2 ; -11/1290240 sin 3/2 ; 107/11531520 sin 5/2
[crack primal j=1 h=10 f=0]
-1/39916800 sin 1/2

# j = 3
[crack primal j=3 h=0 f=0]
1 sin 3/2
[crack primal j=3 h=0 f=1]
-1/4 sin 1/2
[crack primal j=3 h=0 f=2]
-3/32 sin 1/2 ; 1/10 sin 3/2
[crack primal j=3 h=0 f=3]
-3/40 sin 1/2 ; 5/128 sin 3/2 ; -3/70 sin 5/2
[crack primal j=3 h=0 f=4]
-3/64 sin 1/2 ; 27/560 sin 3/2 ; -35/2048 sin 5/2 ; 2/105 sin 7/2
[crack primal j=3 h=0 f=5]
-9/224 sin 1/2 ; 7/256 sin 3/2 ; -1/35 sin 5/2 ; 63/8192 sin 7/2 ; -2/231 sin 9/2
[crack primal j=3 h=0 f=6]
-15/512 sin 1/2 ; 5/168 sin 3/2 ; -63/4096 sin 5/2 ; 5/308 sin 7/2 ; -231/65536 sin 9/2 ; 4/1001 sin 11/2
[crack primal j=3 h=0 f=7]
-5/192 sin 1/2 ; 81/4096 sin 3/2 ; -25/1232 sin 5/2 ; 693/81920 sin 7/2 ; -9/1001 sin 9/2 ; 429/262144 sin 11/2 ; -4/2145 sin 13/2
[crack primal j=3 h=0 f=8]
-21/1024 sin 1/2 ; 175/8448 sin 3/2 ; -2079/163840 sin 5/2 ; 15/1144 sin 7/2 ; -3003/655360 sin 9/2 ; 7/1430 sin 11/2 ; -6435/8388608 sin 13/2 ; 32/36465 sin 15/2
[crack primal j=3 h=0 f=9]
-105/5632 sin 1/2 ; 77/5120 sin 3/2 ; -35/2288 sin 5/2 ; 1287/163840 sin 7/2 ; -7/858 sin 9/2 ; 1287/524288 sin 11/2 ; -32/12155 sin 13/2 ; 12155/33554432 sin 15/2 ; -96/230945 sin 17/2
[crack primal j=3 h=2 f=0]
-1/10 sin 3/2
[crack primal j=3 h=2 f=1]
3/40 sin 1/2 ; 11/140 sin 5/2
[crack primal j=3 h=2 f=2]
3/64 sin 1/2 ; -7/80 sin 3/2 ; -41/840 sin 7/2
[crack primal j=3 h=2 f=3]
65/896 sin 1/2 ; -7/256 sin 3/2 ; 145/2016 sin 5/2 ; 103/3696 sin 9/2
[crack primal j=3 h=2 f=4]
27/512 sin 1/2 ; -17959/241920 sin 3/2 ; 63/4096 sin 5/2 ; -2263/44352 sin 7/2 ; -489/32032 sin 11/2
[crack primal j=3 h=2 f=5]
8929/138240 sin 1/2 ; -291/8192 sin 3/2 ; 2483/39424 sin 5/2 ; -693/81920 sin 7/2 ; 12829/384384 sin 9/2 ; 1121/137280 sin 13/2
[crack primal j=3 h=2 f=6]
4151/81920 sin 1/2 ; -1358089/21288960 sin 3/2 ; 3729/163840 sin 5/2 ; -63161/1317888 sin 7/2 ; 3003/655360 sin 9/2 ; -34169/1647360 sin 11/2 ; -20081/4667520 sin 15/2
[crack primal j=3 h=2 f=7]
2161361/37847040 sin 1/2 ; -21857/589824 sin 3/2 ; 10216499/184504320 sin 5/2 ; -18447/1310720 sin 7/2 ; 1342447/39536640 sin 9/2 ; -1287/524288 sin 11/2 ; 63367/5091840 sin 13/2 ; 132641/59121920 sin 17/2
[crack primal j=3 h=4 f=0]
1/280 sin 3/2
[crack primal j=3 h=4 f=1]
-1/224 sin 1/2 ; -13/2520 sin 5/2
[crack primal j=3 h=4 f=2]
-1/256 sin 1/2 ; 7/864 sin 3/2 ; 109/22176 sin 7/2
[crack primal j=3 h=4 f=3]
-59/6912 sin 1/2 ; 3/1024 sin 3/2 ; -25/2688 sin 5/2 ; -17/4368 sin 9/2
[crack primal j=3 h=4 f=4]
-23/3072 sin 1/2 ; 17431/1520640 sin 3/2 ; -33/16384 sin 5/2 ; 355/41184 sin 7/2 ; 457/164736 sin 11/2
[crack primal j=3 h=4 f=5]
-7781/675840 sin 1/2 ; 869/147456 sin 3/2 ; -120277/9884160 sin 5/2 ; 429/327680 sin 7/2 ; -13919/1976832 sin 9/2 ; -25879/14002560 sin 13/2
[crack primal j=3 h=6 f=0]
-1/15120 sin 3/2
[crack primal j=3 h=6 f=1]
1/8640 sin 1/2 ; 1/7392 sin 5/2
[crack primal j=3 h=6 f=2]
1/7680 sin 1/2 ; -53/190080 sin 3/2 ; -7/41184 sin 7/2
[crack primal j=3 h=6 f=3]
61/168960 sin 1/2 ; -11/92160 sin 3/2 ; 997/2471040 sin 5/2 ; 19/112320 sin 9/2
[crack primal j=3 h=8 f=0]
1/1330560 sin 3/2
[crack primal j=3 h=8 f=1]
-1/591360 sin 1/2 ; -17/8648640 sin 5/2

# j = 5
[crack primal j=5 h=0 f=0]
1 sin 5/2
[crack primal j=5 h=0 f=1]
-1/4 sin 3/2
[crack primal j=5 h=0 f=2]
3/32 sin 1/2 ; 3/28 sin 5/2
[crack primal j=5 h=0 f=3]
5/128 sin 1/2 ; -9/112 sin 3/2 ; -1/21 sin 7/2
[crack primal j=5 h=0 f=4]
45/896 sin 1/2 ; -35/2048 sin 3/2 ; 3/56 sin 5/2 ; 5/231 sin 9/2
[crack primal j=5 h=0 f=5]
15/512 sin 1/2 ; -5/112 sin 3/2 ; 63/8192 sin 5/2 ; -5/154 sin 7/2 ; -10/1001 sin 11/2
[crack primal j=5 h=0 f=6]
25/768 sin 1/2 ; -135/8192 sin 3/2 ; 125/3696 sin 5/2 ; -231/65536 sin 7/2 ; 75/4004 sin 9/2 ; 2/429 sin 13/2
[crack primal j=5 h=0 f=7]
45/2048 sin 1/2 ; -125/4224 sin 3/2 ; 297/32768 sin 5/2 ; -375/16016 sin 7/2 ; 429/262144 sin 9/2 ; -3/286 sin 11/2 ; -16/7293 sin 15/2
[crack primal j=5 h=0 f=8]
525/22528 sin 1/2 ; -231/16384 sin 3/2 ; 875/36608 sin 5/2 ; -1287/262144 sin 7/2 ; 35/2288 sin 9/2 ; -6435/8388608 sin 11/2 ; 14/2431 sin 13/2 ; 48/46189 sin 17/2
[crack primal j=5 h=2 f=0]
-1/14 sin 5/2
[crack primal j=5 h=2 f=1]
3/56 sin 3/2 ; 5/84 sin 7/2
[crack primal j=5 h=2 f=2]
-15/448 sin 1/2 ; -67/1008 sin 5/2 ; -71/1848 sin 9/2
[crack primal j=5 h=2 f=3]
-5/256 sin 1/2 ; 445/8064 sin 3/2 ; 1261/22176 sin 7/2 ; 361/16016 sin 11/2
[crack primal j=5 h=2 f=4]
-185/4608 sin 1/2 ; 45/4096 sin 3/2 ; -31309/532224 sin 5/2 ; -725/17472 sin 9/2 ; -173/13728 sin 13/2
[crack primal j=5 h=2 f=5]
-665/24576 sin 1/2 ; 15589/304128 sin 3/2 ; -99/16384 sin 5/2 ; 33853/658944 sin 7/2 ; 4567/164736 sin 11/2 ; 3197/466752 sin 15/2
[crack primal j=5 h=2 f=6]
-21763/540672 sin 1/2 ; 1705/98304 sin 3/2 ; -961937/18450432 sin 5/2 ; 429/131072 sin 7/2 ; -263249/6589440 sin 9/2 ; -5771/329472 sin 13/2 ; -21613/5912192 sin 17/2
[crack primal j=5 h=4 f=0]
1/504 sin 5/2
[crack primal j=5 h=4 f=1]
-5/2016 sin 3/2 ; -17/5544 sin 7/2
[crack primal j=5 h=4 f=2]
5/2304 sin 1/2 ; 10/2079 sin 5/2 ; 295/96096 sin 9/2
[crack primal j=5 h=4 f=3]
5/3072 sin 1/2 ; -35/6912 sin 3/2 ; -955/164736 sin 7/2 ; -1/396 sin 11/2
[crack primal j=5 h=4 f=4]
25/5632 sin 1/2 ; -55/49152 sin 3/2 ; 28211/3953664 sin 5/2 ; 919/164736 sin 9/2 ; 5197/2800512 sin 13/2
[crack primal j=5 h=6 f=0]
-1/33264 sin 5/2
[crack primal j=5 h=6 f=1]
1/19008 sin 3/2 ; 19/288288 sin 7/2
[crack primal j=5 h=6 f=2]
-1/16896 sin 1/2 ; -67/494208 sin 5/2 ; -1/11440 sin 9/2
[crack primal j=5 h=8 f=0]
1/3459456 sin 5/2

# j = 7
[crack primal j=7 h=0 f=0]
1 sin 7/2
[crack primal j=7 h=0 f=1]
-1/4 sin 5/2
[crack primal j=7 h=0 f=2]
3/32 sin 3/2 ; 1/9 sin 7/2
[crack primal j=7 h=0 f=3]
-5/128 sin 1/2 ; -1/12 sin 5/2 ; -5/99 sin 9/2
[crack primal j=7 h=0 f=4]
-35/2048 sin 1/2 ; 5/96 sin 3/2 ; 5/88 sin 7/2 ; 10/429 sin 11/2
[crack primal j=7 h=0 f=5]
-35/1152 sin 1/2 ; 63/8192 sin 3/2 ; -25/528 sin 5/2 ; -5/143 sin 9/2 ; -14/1287 sin 13/2
[crack primal j=7 h=0 f=6]
-35/2048 sin 1/2 ; 875/25344 sin 3/2 ; -231/65536 sin 5/2 ; 125/3432 sin 7/2 ; 35/1716 sin 11/2 ; 112/21879 sin 15/2
[crack primal j=7 h=0 f=7]
-525/22528 sin 1/2 ; 77/8192 sin 3/2 ; -875/27456 sin 5/2 ; 429/262144 sin 7/2 ; -175/6864 sin 9/2 ; -28/2431 sin 13/2 ; -112/46189 sin 17/2
[crack primal j=7 h=2 f=0]
-1/18 sin 7/2
[crack primal j=7 h=2 f=1]
1/24 sin 5/2 ; 19/396 sin 9/2
[crack primal j=7 h=2 f=2]
-5/192 sin 3/2 ; -85/1584 sin 7/2 ; -109/3432 sin 11/2
[crack primal j=7 h=2 f=3]
35/2304 sin 1/2 ; 565/12672 sin 5/2 ; 647/13728 sin 9/2 ; 391/20592 sin 13/2
[crack primal j=7 h=2 f=4]
35/4096 sin 1/2 ; -1645/50688 sin 3/2 ; -48259/988416 sin 7/2 ; -321/9152 sin 11/2 ; -7543/700128 sin 15/2
[crack primal j=7 h=2 f=5]
5915/270336 sin 1/2 ; -77/16384 sin 3/2 ; 168343/3953664 sin 5/2 ; 430007/9884160 sin 9/2 ; 66637/2800512 sin 13/2 ; 17517/2956096 sin 17/2
[crack primal j=7 h=4 f=0]
1/792 sin 7/2
[crack primal j=7 h=4 f=1]
-5/3168 sin 5/2 ; -7/3432 sin 9/2
[crack primal j=7 h=4 f=2]
35/25344 sin 3/2 ; 395/123552 sin 7/2 ; 29/13728 sin 11/2
[crack primal j=7 h=4 f=3]
-35/33792 sin 1/2 ; -3325/988416 sin 5/2 ; -179/44928 sin 9/2 ; -625/350064 sin 13/2
[crack primal j=7 h=6 f=0]
-1/61776 sin 7/2
[crack primal j=7 h=6 f=1]
7/247104 sin 5/2 ; 23/617760 sin 9/2

# j = 9
[crack primal j=9 h=0 f=0]
1 sin 9/2
[crack primal j=9 h=0 f=1]
-1/4 sin 7/2
[crack primal j=9 h=0 f=2]
3/32 sin 5/2 ; 5/44 sin 9/2
[crack primal j=9 h=0 f=3]
-5/128 sin 3/2 ; -15/176 sin 7/2 ; -15/286 sin 11/2
[crack primal j=9 h=0 f=4]
35/2048 sin 1/2 ; 75/1408 sin 5/2 ; 135/2288 sin 9/2 ; 7/286 sin 13/2
[crack primal j=9 h=0 f=5]
63/8192 sin 1/2 ; -175/5632 sin 3/2 ; -225/4576 sin 7/2 ; -21/572 sin 11/2 ; -28/2431 sin 15/2
[crack primal j=9 h=0 f=6]
1575/90112 sin 1/2 ; -231/65536 sin 3/2 ; 2625/73216 sin 5/2 ; 175/4576 sin 9/2 ; 105/4862 sin 13/2 ; 252/46189 sin 17/2
[crack primal j=9 h=2 f=0]
-1/22 sin 9/2
[crack primal j=9 h=2 f=1]
3/88 sin 7/2 ; 23/572 sin 11/2
[crack primal j=9 h=2 f=2]
-15/704 sin 5/2 ; -103/2288 sin 9/2 ; -31/1144 sin 13/2
[crack primal j=9 h=2 f=3]
35/2816 sin 3/2 ; 685/18304 sin 7/2 ; 553/13728 sin 11/2 ; 639/38896 sin 15/2
[crack primal j=9 h=2 f=4]
-315/45056 sin 1/2 ; -1995/73216 sin 5/2 ; -5293/126720 sin 9/2 ; -14197/466752 sin 13/2 ; -13933/1478048 sin 17/2
[crack primal j=9 h=4 f=0]
1/1144 sin 9/2
[crack primal j=9 h=4 f=1]
-5/4576 sin 7/2 ; -5/3432 sin 11/2
[crack primal j=9 h=4 f=2]
35/36608 sin 5/2 ; 47/20592 sin 9/2 ; 361/233376 sin 13/2
[crack primal j=9 h=6 f=0]
-1/102960 sin 9/2

# j = 11
[crack primal j=11 h=0 f=0]
1 sin 11/2
[crack primal j=11 h=0 f=1]
-1/4 sin 9/2
[crack primal j=11 h=0 f=2]
3/32 sin 7/2 ; 3/26 sin 11/2
[crack primal j=11 h=0 f=3]
-5/128 sin 5/2 ; -9/104 sin 9/2 ; -7/130 sin 13/2
[crack primal j=11 h=0 f=4]
35/2048 sin 3/2 ; 45/832 sin 7/2 ; 63/1040 sin 11/2 ; 28/1105 sin 15/2
[crack primal j=11 h=0 f=5]
-63/8192 sin 1/2 ; -105/3328 sin 5/2 ; -21/416 sin 9/2 ; -42/1105 sin 13/2 ; -252/20995 sin 17/2
[crack primal j=11 h=2 f=0]
-1/26 sin 11/2
[crack primal j=11 h=2 f=1]
3/104 sin 9/2 ; 9/260 sin 13/2
[crack primal j=11 h=2 f=2]
-15/832 sin 7/2 ; -121/3120 sin 11/2 ; -209/8840 sin 15/2
[crack primal j=11 h=2 f=3]
35/3328 sin 5/2 ; 161/4992 sin 9/2 ; 3733/106080 sin 13/2 ; 4867/335920 sin 17/2
[crack primal j=11 h=4 f=0]
1/1560 sin 11/2
[crack primal j=11 h=4 f=1]
-1/1248 sin 9/2 ; -29/26520 sin 13/2

# j = 13
[crack primal j=13 h=0 f=0]
1 sin 13/2
[crack primal j=13 h=0 f=1]
-1/4 sin 11/2
[crack primal j=13 h=0 f=2]
3/32 sin 9/2 ; 7/60 sin 13/2
[crack primal j=13 h=0 f=3]
-5/128 sin 7/2 ; -7/80 sin 11/2 ; -14/255 sin 15/2
[crack primal j=13 h=0 f=4]
35/2048 sin 5/2 ; 7/128 sin 9/2 ; 21/340 sin 13/2 ; 42/1615 sin 17/2
[crack primal j=13 h=2 f=0]
-1/30 sin 13/2
[crack primal j=13 h=2 f=1]
1/40 sin 11/2 ; 31/1020 sin 15/2
[crack primal j=13 h=2 f=2]
-1/64 sin 9/2 ; -139/4080 sin 13/2 ; -271/12920 sin 17/2
[crack primal j=13 h=4 f=0]
1/2040 sin 13/2

# j = 15
[crack primal j=15 h=0 f=0]
1 sin 15/2
[crack primal j=15 h=0 f=1]
-1/4 sin 13/2
[crack primal j=15 h=0 f=2]
3/32 sin 11/2 ; 2/17 sin 15/2
[crack primal j=15 h=0 f=3]
-5/128 sin 9/2 ; -3/34 sin 13/2 ; -18/323 sin 17/2
[crack primal j=15 h=2 f=0]
-1/34 sin 15/2
[crack primal j=15 h=2 f=1]
3/136 sin 13/2 ; 35/1292 sin 17/2

# j = 17
[crack primal j=17 h=0 f=0]
1 sin 17/2
[crack primal j=17 h=0 f=1]
-1/4 sin 15/2
[crack primal j=17 h=0 f=2]
3/32 sin 13/2 ; 9/76 sin 17/2
[crack primal j=17 h=2 f=0]
1/38 sin 17/2

# j = 19
[crack primal j=19 h=0 f=0]
1 sin 19/2
[crack primal j=19 h=0 f=1]
-1/4 sin 17/2

# j = 21
[crack primal j=21 h=0 f=0]
1 sin 21/2
)CORPUS";

const char k_crack_dual[] = R"CORPUS(
# crack dual reference tables (45 entries)

# j = 1
[crack dual j=1 h=0 f=0]
1 sin 1/2
[crack dual j=1 h=0 f=1]
-1/4 sin 3/2
[crack dual j=1 h=0 f=2]
3/32 sin 5/2
[crack dual j=1 h=0 f=3]
-5/128 sin 7/2
[crack dual j=1 h=0 f=4]
35/2048 sin 9/2
[crack dual j=1 h=2 f=0]
-1/2 sin 1/2
[crack dual j=1 h=2 f=1]
-1/4 sin 1/2 ; 3/8 sin 3/2
[crack dual j=1 h=2 f=2]
-13/48 sin 1/2 ; 1/8 sin 3/2 ; -15/64 sin 5/2
[crack dual j=1 h=2 f=3]
-17/96 sin 1/2 ; 85/384 sin 3/2 ; -1/16 sin 5/2 ; 35/256 sin 7/2
[crack dual j=1 h=2 f=4]
-2059/11520 sin 1/2 ; 7/64 sin 3/2 ; -245/1536 sin 5/2 ; 1/32 sin 7/2 ; -315/4096 sin 9/2
[crack dual j=1 h=4 f=0]
1/24 sin 1/2
[crack dual j=1 h=4 f=1]
1/24 sin 1/2 ; -5/96 sin 3/2
[crack dual j=1 h=4 f=2]
19/288 sin 1/2 ; -1/32 sin 3/2 ; 35/768 sin 5/2
[crack dual j=1 h=4 f=3]
23/384 sin 1/2 ; -161/2304 sin 3/2 ; 1/48 sin 5/2 ; -35/1024 sin 7/2
[crack dual j=1 h=4 f=4]
3431/46080 sin 1/2 ; -3/64 sin 3/2 ; 63/1024 sin 5/2 ; -5/384 sin 7/2 ; 385/16384 sin 9/2

# j = 3
[crack dual j=3 h=0 f=0]
1 sin 3/2
[crack dual j=3 h=0 f=1]
-1/4 sin 5/2
[crack dual j=3 h=0 f=2]
1/4 sin 3/2 ; 3/32 sin 7/2
[crack dual j=3 h=0 f=3]
-3/16 sin 5/2 ; -5/128 sin 9/2
[crack dual j=3 h=0 f=4]
15/128 sin 7/2 ; 35/2048 sin 11/2
[crack dual j=3 h=2 f=0]
1/2 sin 3/2
[crack dual j=3 h=2 f=1]
1/4 sin 1/2 ; -3/8 sin 5/2
[crack dual j=3 h=2 f=2]
1/8 sin 1/2 ; -5/16 sin 3/2 ; 15/64 sin 7/2
[crack dual j=3 h=2 f=3]
19/96 sin 1/2 ; -1/16 sin 3/2 ; 35/128 sin 5/2 ; -35/256 sin 9/2
[crack dual j=3 h=2 f=4]
23/192 sin 1/2 ; -491/2304 sin 3/2 ; 1/32 sin 5/2 ; -105/512 sin 7/2 ; 315/4096 sin 11/2
[crack dual j=3 h=4 f=0]
-1/8 sin 3/2
[crack dual j=3 h=4 f=1]
1/24 sin 1/2 ; 5/32 sin 5/2
[crack dual j=3 h=4 f=2]
1/96 sin 1/2 ; -5/72 sin 3/2 ; -35/256 sin 7/2
[crack dual j=3 h=4 f=3]
3/128 sin 1/2 ; 175/2304 sin 5/2 ; 105/1024 sin 9/2
[crack dual j=3 h=4 f=4]
1/384 sin 1/2 ; -1477/46080 sin 3/2 ; -1/384 sin 5/2 ; -35/512 sin 7/2 ; -1155/16384 sin 11/2

# j = 5
[crack dual j=5 h=0 f=0]
1 sin 5/2
[crack dual j=5 h=0 f=1]
-1/4 sin 7/2
[crack dual j=5 h=0 f=2]
1/6 sin 5/2 ; 3/32 sin 9/2
[crack dual j=5 h=0 f=3]
-1/6 sin 3/2 ; -1/8 sin 7/2 ; -5/128 sin 11/2
[crack dual j=5 h=0 f=4]
3/16 sin 5/2 ; 5/64 sin 9/2 ; 35/2048 sin 13/2
[crack dual j=5 h=2 f=0]
1/6 sin 5/2
[crack dual j=5 h=2 f=1]
-5/12 sin 3/2 ; -1/8 sin 7/2
[crack dual j=5 h=2 f=2]
-1/8 sin 1/2 ; 23/48 sin 5/2 ; 5/64 sin 9/2
[crack dual j=5 h=2 f=3]
-1/16 sin 1/2 ; 7/32 sin 3/2 ; -155/384 sin 7/2 ; -35/768 sin 11/2
[crack dual j=5 h=2 f=4]
-25/192 sin 1/2 ; 1/32 sin 3/2 ; -559/2304 sin 5/2 ; 455/1536 sin 9/2 ; 105/4096 sin 13/2
[crack dual j=5 h=4 f=0]
1/24 sin 5/2
[crack dual j=5 h=4 f=1]
1/8 sin 3/2 ; -5/96 sin 7/2
[crack dual j=5 h=4 f=2]
-5/96 sin 1/2 ; -55/288 sin 5/2 ; 35/768 sin 9/2
[crack dual j=5 h=4 f=3]
-1/48 sin 1/2 ; 115/1152 sin 3/2 ; 455/2304 sin 7/2 ; -35/1024 sin 11/2
[crack dual j=5 h=4 f=4]
-7/144 sin 1/2 ; 1/128 sin 3/2 ; -1141/9216 sin 5/2 ; -175/1024 sin 9/2 ; 385/16384 sin 13/2
)CORPUS";

const char k_vnotch90_primal[] = R"CORPUS(
# vnotch90 primal reference tables (191 entries)

# j = 1
[vnotch90 primal j=1 h=0 f=0]
1 sin 2/3 ; 0+1/3r3 cos 2/3
[vnotch90 primal j=1 h=0 f=1]
1/4 sin 1/3 ; 0-1/12r3 cos 1/3 ; 1/20 sin 5/3 ; 0+1/60r3 cos 5/3
[vnotch90 primal j=1 h=0 f=2]
3/40 sin 2/3 ; 0+1/40r3 cos 2/3 ; -3/32 sin 4/3 ; 0+1/32r3 cos 4/3
[vnotch90 primal j=1 h=0 f=3]
39/640 sin 1/3 ; 0-13/640r3 cos 1/3 ; -39/1280 sin 5/3 ; 0-13/1280r3 cos 5/3 ; 5/128 sin 7/3 ; 0-5/384r3 cos 7/3 ; 7/1280 sin 11/3 ; 0+7/3840r3 cos 11/3
[vnotch90 primal j=1 h=0 f=4]
741/20480 sin 2/3 ; 0+247/20480r3 cos 2/3 ; -5/128 sin 4/3 ; 0+5/384r3 cos 4/3 ; 83/7040 sin 8/3 ; 0+83/21120r3 cos 8/3 ; -35/2048 sin 10/3 ; 0+35/6144r3 cos 10/3
[vnotch90 primal j=1 h=0 f=5]
507/16384 sin 1/3 ; 0-169/16384r3 cos 1/3 ; -18063/901120 sin 5/3 ; 0-6021/901120r3 cos 5/3 ; 189/8192 sin 7/3 ; 0-63/8192r3 cos 7/3 ; -415/78848 sin 11/3 ; 0-415/236544r3 cos 11/3 ; 63/8192 sin 13/3 ; 0-21/8192r3 cos 13/3 ; 109/157696 sin 17/3 ; 0+109/473088r3 cos 17/3
[vnotch90 primal j=1 h=0 f=6]
7827/360448 sin 2/3 ; 0+2609/360448r3 cos 2/3 ; -3003/131072 sin 4/3 ; 0+1001/131072r3 cos 4/3 ; 110235/10092544 sin 8/3 ; 0+36745/10092544r3 cos 8/3 ; -1071/81920 sin 10/3 ; 0+357/81920r3 cos 10/3 ; 3411/1531904 sin 14/3 ; 0+1137/1531904r3 cos 14/3 ; -231/65536 sin 16/3 ; 0+77/65536r3 cos 16/3
[vnotch90 primal j=1 h=0 f=7]
55923/2883584 sin 1/3 ; 0-18641/2883584r3 cos 1/3 ; -575075/40370176 sin 5/3 ; 0-575075/121110528r3 cos 5/3 ; 4095/262144 sin 7/3 ; 0-1365/262144r3 cos 7/3 ; -3990333/686292992 sin 11/3 ; 0-1330111/686292992r3 cos 11/3 ; 9471/1310720 sin 13/3 ; 0-3157/1310720r3 cos 13/3 ; -126207/122552320 sin 17/3 ; 0-42069/122552320r3 cos 17/3 ; 429/262144 sin 19/3 ; 0-143/262144r3 cos 19/3 ; 87217/857866240 sin 23/3 ; 0+87217/2573598720r3 cos 23/3
[vnotch90 primal j=1 h=0 f=8]
1373975/92274688 sin 2/3 ; 0+1373975/276824064r3 cos 2/3 ; -223083/14417920 sin 4/3 ; 0+74361/14417920r3 cos 4/3 ; 437105/49020928 sin 8/3 ; 0+437105/147062784r3 cos 8/3 ; -423423/41943040 sin 10/3 ; 0+141141/41943040r3 cos 10/3 ; 168845097/54903439360 sin 14/3 ; 0+56281699/54903439360r3 cos 14/3 ; -1287/327680 sin 16/3 ; 0+429/327680r3 cos 16/3 ; 8995579/19730923520 sin 20/3 ; 0+8995579/59192770560r3 cos 20/3 ; -6435/8388608 sin 22/3 ; 0+2145/8388608r3 cos 22/3
[vnotch90 primal j=1 h=0 f=9]
5022675/369098752 sin 1/3 ; 0-1674225/369098752r3 cos 1/3 ; -67071105/6274678784 sin 5/3 ; 0-22357035/6274678784r3 cos 5/3 ; 1921143/167772160 sin 7/3 ; 0-640381/167772160r3 cos 7/3 ; -237418011/43922751488 sin 11/3 ; 0-79139337/43922751488r3 cos 11/3 ; 1054053/167772160 sin 13/3 ; 0-351351/167772160r3 cos 13/3 ; -6422067/3992977408 sin 17/3 ; 0-2140689/3992977408r3 cos 17/3 ; 70785/33554432 sin 19/3 ; 0-23595/33554432r3 cos 19/3 ; -62969053/293145149440 sin 23/3 ; 0-62969053/879435448320r3 cos 23/3 ; 12155/33554432 sin 25/3 ; 0-12155/100663296r3 cos 25/3 ; 187981/11152261120 sin 29/3 ; 0+187981/33456783360r3 cos 29/3
[vnotch90 primal j=1 h=0 f=10]
8130321/738197504 sin 2/3 ; 0+2710107/738197504r3 cos 2/3 ; -1523235/134217728 sin 4/3 ; 0+507745/134217728r3 cos 4/3 ; 183436047/25098715136 sin 8/3 ; 0+61145349/25098715136r3 cos 8/3 ; -2694237/335544320 sin 10/3 ; 0+898079/335544320r3 cos 10/3 ; 6458473029/2020446568448 sin 14/3 ; 0+2152824343/2020446568448r3 cos 14/3 ; -1020591/268435456 sin 16/3 ; 0+340197/268435456r3 cos 16/3 ; 62912432373/75045158256640 sin 20/3 ; 0+20970810791/75045158256640r3 cos 20/3 ; -75361/67108864 sin 22/3 ; 0+75361/201326592r3 cos 22/3 ; 1787693753/18310297026560 sin 26/3 ; 0+1787693753/54930891079680r3 cos 26/3 ; -46189/268435456 sin 28/3 ; 0+46189/805306368r3 cos 28/3
[vnotch90 primal j=1 h=2 f=0]
-3/20 sin 2/3 ; 0-1/20r3 cos 2/3
[vnotch90 primal j=1 h=2 f=1]
-9/80 sin 1/3 ; 0+3/80r3 cos 1/3 ; 33/320 sin 5/3 ; 0+11/320r3 cos 5/3 ; 201/3520 sin 11/3 ; 0+67/3520r3 cos 11/3
[vnotch90 primal j=1 h=2 f=2]
-297/2560 sin 2/3 ; 0-99/2560r3 cos 2/3 ; 9/128 sin 4/3 ; 0-3/128r3 cos 4/3 ; -261/3520 sin 8/3 ; 0-87/3520r3 cos 8/3
[vnotch90 primal j=1 h=2 f=3]
-99/1024 sin 1/3 ; 0+33/1024r3 cos 1/3 ; 531/5632 sin 5/3 ; 0+177/5632r3 cos 5/3 ; -21/512 sin 7/3 ; 0+7/512r3 cos 7/3 ; 30621/788480 sin 11/3 ; 0+10207/788480r3 cos 11/3 ; 115281/13404160 sin 17/3 ; 0+38427/13404160r3 cos 17/3
[vnotch90 primal j=1 h=2 f=4]
-85161/901120 sin 2/3 ; 0-28387/901120r3 cos 2/3 ; 1155/16384 sin 4/3 ; 0-385/16384r3 cos 4/3 ; -408987/6307840 sin 8/3 ; 0-136329/6307840r3 cos 8/3 ; 189/8192 sin 10/3 ; 0-63/8192r3 cos 10/3 ; -2127/95744 sin 14/3 ; 0-709/95744r3 cos 14/3
[vnotch90 primal j=1 h=2 f=5]
-587979/7208960 sin 1/3 ; 0+195993/7208960r3 cos 1/3 ; 489393/6307840 sin 5/3 ; 0+163131/6307840r3 cos 5/3 ; -6237/131072 sin 7/3 ; 0+2079/131072r3 cos 7/3 ; 3600081/85786624 sin 11/3 ; 0+1200027/85786624r3 cos 11/3 ; -2079/163840 sin 13/3 ; 0+693/163840r3 cos 13/3 ; 12066063/1072332800 sin 17/3 ; 0+4022021/1072332800r3 cos 17/3 ; 33264381/24663654400 sin 23/3 ; 0+11088127/24663654400r3 cos 23/3
[vnotch90 primal j=1 h=2 f=6]
-7834653/100925440 sin 2/3 ; 0-2611551/100925440r3 cos 2/3 ; 1840671/28835840 sin 4/3 ; 0-613557/28835840r3 cos 4/3 ; -28346247/490209280 sin 8/3 ; 0-9448749/490209280r3 cos 8/3 ; 160083/5242880 sin 10/3 ; 0-53361/5242880r3 cos 10/3 ; -880073217/34314649600 sin 14/3 ; 0-293357739/34314649600r3 cos 14/3 ; 9009/1310720 sin 16/3 ; 0-3003/1310720r3 cos 16/3 ; -3494313/580321280 sin 20/3 ; 0-1164771/580321280r3 cos 20/3
[vnotch90 primal j=1 h=2 f=7]
-111635091/1614807040 sin 1/3 ; 0+37211697/1614807040r3 cos 1/3 ; 360732711/5490343936 sin 5/3 ; 0+120244237/5490343936r3 cos 5/3 ; -244629/5242880 sin 7/3 ; 0+81543/5242880r3 cos 7/3 ; 5529857037/137258598400 sin 11/3 ; 0+1843285679/137258598400r3 cos 11/3 ; -99099/5242880 sin 13/3 ; 0+33033/5242880r3 cos 13/3 ; 48130597791/3156947763200 sin 17/3 ; 0+16043532597/3156947763200r3 cos 17/3 ; -3861/1048576 sin 19/3 ; 0+1287/1048576r3 cos 19/3 ; 6201246189/2052016046080 sin 23/3 ; 0+2067082063/2052016046080r3 cos 23/3 ; 68732240613/297542326681600 sin 29/3 ; 0+22910746871/297542326681600r3 cos 29/3
[vnotch90 primal j=1 h=2 f=8]
-71998494111/1098068787200 sin 2/3 ; 0-23999498037/1098068787200r3 cos 2/3 ; 66573333/1174405120 sin 4/3 ; 0-22191111/1174405120r3 cos 4/3 ; -56331375549/1098068787200 sin 8/3 ; 0-18777125183/1098068787200r3 cos 8/3 ; 5441553/167772160 sin 10/3 ; 0-1813851/167772160r3 cos 10/3 ; -676649740917/25255582105600 sin 14/3 ; 0-225549913639/25255582105600r3 cos 14/3 ; 382239/33554432 sin 16/3 ; 0-127413/33554432r3 cos 16/3 ; -2893138174539/328322567372800 sin 20/3 ; 0-964379391513/328322567372800r3 cos 20/3 ; 65637/33554432 sin 22/3 ; 0-21879/33554432r3 cos 22/3 ; -782944119/497562419200 sin 26/3 ; 0-260981373/497562419200r3 cos 26/3
[vnotch90 primal j=1 h=4 f=0]
9/1280 sin 2/3 ; 0+3/1280r3 cos 2/3
[vnotch90 primal j=1 h=4 f=1]
9/1024 sin 1/3 ; 0-3/1024r3 cos 1/3 ; -513/56320 sin 5/3 ; 0-171/56320r3 cos 5/3 ; -603/197120 sin 11/3 ; 0-201/197120r3 cos 11/3 ; 4077/3351040 sin 17/3 ; 0+1359/3351040r3 cos 17/3
[vnotch90 primal j=1 h=4 f=2]
81/5632 sin 2/3 ; 0+27/5632r3 cos 2/3 ; -63/8192 sin 4/3 ; 0+21/8192r3 cos 4/3 ; 32643/3153920 sin 8/3 ; 0+10881/3153920r3 cos 8/3 ; 225/95744 sin 14/3 ; 0+75/95744r3 cos 14/3
[vnotch90 primal j=1 h=4 f=3]
5481/360448 sin 1/3 ; 0-1827/360448r3 cos 1/3 ; -42381/2523136 sin 5/3 ; 0-14127/2523136r3 cos 5/3 ; 189/32768 sin 7/3 ; 0-63/32768r3 cos 7/3 ; -381159/42893312 sin 11/3 ; 0-127053/42893312r3 cos 11/3 ; -2085399/1072332800 sin 17/3 ; 0-695133/1072332800r3 cos 17/3 ; 6296517/24663654400 sin 23/3 ; 0+2098839/24663654400r3 cos 23/3
[vnotch90 primal j=1 h=4 f=4]
143271/7208960 sin 2/3 ; 0+47757/7208960r3 cos 2/3 ; -9639/720896 sin 4/3 ; 0+3213/720896r3 cos 4/3 ; 17721/1114112 sin 8/3 ; 0+5907/1114112r3 cos 8/3 ; -2079/524288 sin 10/3 ; 0+693/524288r3 cos 10/3 ; 117818433/17157324800 sin 14/3 ; 0+39272811/17157324800r3 cos 14/3 ; 300429/246636544 sin 20/3 ; 0+100143/246636544r3 cos 20/3
[vnotch90 primal j=1 h=4 f=5]
103113/5242880 sin 1/3 ; 0-34371/5242880r3 cos 1/3 ; -20531691/980418560 sin 5/3 ; 0-6843897/980418560r3 cos 5/3 ; 22113/2097152 sin 7/3 ; 0-7371/2097152r3 cos 7/3 ; -916217847/68629299200 sin 11/3 ; 0-305405949/68629299200r3 cos 11/3 ; 27027/10485760 sin 13/3 ; 0-9009/10485760r3 cos 13/3 ; -1087950933/225496268800 sin 17/3 ; 0-362650311/225496268800r3 cos 17/3 ; -21923613/28187033600 sin 23/3 ; 0-7307871/28187033600r3 cos 23/3 ; 12119787/260089446400 sin 29/3 ; 0+4039929/260089446400r3 cos 29/3
[vnotch90 primal j=1 h=4 f=6]
31571721/1372585984 sin 2/3 ; 0+10523907/1372585984r3 cos 2/3 ; -1454139/83886080 sin 4/3 ; 0+484713/83886080r3 cos 4/3 ; 303306111/15686696960 sin 8/3 ; 0+101102037/15686696960r3 cos 8/3 ; -81081/10485760 sin 10/3 ; 0+27027/10485760r3 cos 10/3 ; 1474715619/143497625600 sin 14/3 ; 0+491571873/143497625600r3 cos 14/3 ; -27027/16777216 sin 16/3 ; 0+9009/16777216r3 cos 16/3 ; 47980023921/14923753062400 sin 20/3 ; 0+15993341307/14923753062400r3 cos 20/3 ; 10265742423/22887871283200 sin 26/3 ; 0+3421914141/22887871283200r3 cos 26/3
[vnotch90 primal j=1 h=6 f=0]
-9/56320 sin 2/3 ; 0-3/56320r3 cos 2/3
[vnotch90 primal j=1 h=6 f=1]
-63/225280 sin 1/3 ; 0+21/225280r3 cos 1/3 ; 117/394240 sin 5/3 ; 0+39/394240r3 cos 5/3 ; 1809/26808320 sin 11/3 ; 0+603/26808320r3 cos 11/3 ; -12231/268083200 sin 17/3 ; 0-4077/268083200r3 cos 17/3 ; 65853/6165913600 sin 23/3 ; 0+21951/6165913600r3 cos 23/3
[vnotch90 primal j=1 h=6 f=2]
-1107/1802240 sin 2/3 ; 0-369/1802240r3 cos 2/3 ; 567/1802240 sin 4/3 ; 0-189/1802240r3 cos 4/3 ; -13203/30638080 sin 8/3 ; 0-4401/30638080r3 cos 8/3 ; -2889/38297600 sin 14/3 ; 0-963/38297600r3 cos 14/3 ; 23733/616591360 sin 20/3 ; 0+7911/616591360r3 cos 20/3
[vnotch90 primal j=1 h=6 f=3]
-5751/7208960 sin 1/3 ; 0+1917/7208960r3 cos 1/3 ; 22113/24510464 sin 5/3 ; 0+7371/24510464r3 cos 5/3 ; -189/655360 sin 7/3 ; 0+63/655360r3 cos 7/3 ; 583299/1225523200 sin 11/3 ; 0+194433/1225523200r3 cos 11/3 ; 14648229/197309235200 sin 17/3 ; 0+4882743/197309235200r3 cos 17/3 ; -12558753/366431436800 sin 23/3 ; 0-4186251/366431436800r3 cos 23/3 ; -53742519/14877116334080 sin 29/3 ; 0-17914173/14877116334080r3 cos 29/3
[vnotch90 primal j=1 h=6 f=4]
-3125871/2451046400 sin 2/3 ; 0-1041957/2451046400r3 cos 2/3 ; 4347/5242880 sin 4/3 ; 0-1449/5242880r3 cos 4/3 ; -5151429/4902092800 sin 8/3 ; 0-1717143/4902092800r3 cos 8/3 ; 2457/10485760 sin 10/3 ; 0-819/10485760r3 cos 10/3 ; -714190293/1578473881600 sin 14/3 ; 0-238063431/1578473881600r3 cos 14/3 ; -152071371/2565020057600 sin 20/3 ; 0-50690457/2565020057600r3 cos 20/3 ; 37593/1541478400 sin 26/3 ; 0+12531/1541478400r3 cos 26/3
[vnotch90 primal j=1 h=8 f=0]
27/12615680 sin 2/3 ; 0+9/12615680r3 cos 2/3
[vnotch90 primal j=1 h=8 f=1]
243/50462720 sin 1/3 ; 0-81/50462720r3 cos 1/3 ; -4401/857866240 sin 5/3 ; 0-1467/857866240r3 cos 5/3 ; -1809/2144665600 sin 11/3 ; 0-603/2144665600r3 cos 11/3 ; 36693/49327308800 sin 17/3 ; 0+12231/49327308800r3 cos 17/3 ; -197559/641255014400 sin 23/3 ; 0-65853/641255014400r3 cos 23/3 ; 133407/2656627916800 sin 29/3 ; 0+44469/2656627916800r3 cos 29/3
[vnotch90 primal j=1 h=8 f=2]
22599/1715732480 sin 2/3 ; 0+7533/1715732480r3 cos 2/3 ; -243/36700160 sin 4/3 ; 0+81/36700160r3 cos 4/3 ; 60831/6862929920 sin 8/3 ; 0+20277/6862929920r3 cos 8/3 ; 7209/7046758400 sin 14/3 ; 0+2403/7046758400r3 cos 14/3 ; -1215/1165918208 sin 20/3 ; 0-405/1165918208r3 cos 20/3 ; 388557/1430491955200 sin 26/3 ; 0+129519/1430491955200r3 cos 26/3
[vnotch90 primal j=1 h=10 f=0]
-81/4289331200 sin 2/3 ; 0-27/4289331200r3 cos 2/3

# j = 2
[vnotch90 primal j=2 h=0 f=0]
1 sin 4/3 ; 0-1/3r3 cos 4/3
[vnotch90 primal j=2 h=0 f=1]
-1/4 sin 1/3 ; 0+1/12r3 cos 1/3 ; -1/28 sin 7/3 ; 0+1/84r3 cos 7/3
[vnotch90 primal j=2 h=0 f=2]
-3/32 sin 2/3 ; 0-1/32r3 cos 2/3 ; 3/28 sin 4/3 ; 0-1/28r3 cos 4/3
[vnotch90 primal j=2 h=0 f=3]
-69/896 sin 1/3 ; 0+23/896r3 cos 1/3 ; 5/128 sin 5/3 ; 0+5/384r3 cos 5/3 ; -51/1120 sin 7/3 ; 0+17/1120r3 cos 7/3 ; -1/280 sin 13/3 ; 0+1/840r3 cos 13/3
[vnotch90 primal j=2 h=0 f=4]
-85/1792 sin 2/3 ; 0-85/5376r3 cos 2/3 ; 51/1024 sin 4/3 ; 0-17/1024r3 cos 4/3 ; -35/2048 sin 8/3 ; 0-35/6144r3 cos 8/3 ; 35/1664 sin 10/3 ; 0-35/4992r3 cos 10/3
[vnotch90 primal j=2 h=0 f=5]
-1173/28672 sin 1/3 ; 0+391/28672r3 cos 1/3 ; 225/8192 sin 5/3 ; 0+75/8192r3 cos 5/3 ; -1593/53248 sin 7/3 ; 0+531/53248r3 cos 7/3 ; 63/8192 sin 11/3 ; 0+21/8192r3 cos 11/3 ; -1015/106496 sin 13/3 ; 0+1015/319488r3 cos 13/3 ; -319/745472 sin 19/3 ; 0+319/2236416r3 cos 19/3
[vnotch90 primal j=2 h=0 f=6]
-969/32768 sin 2/3 ; 0-323/32768r3 cos 2/3 ; 11391/372736 sin 4/3 ; 0-3797/372736r3 cos 4/3 ; -63/4096 sin 8/3 ; 0-21/4096r3 cos 8/3 ; 58377/3407872 sin 10/3 ; 0-19459/3407872r3 cos 10/3 ; -231/65536 sin 14/3 ; 0-77/65536r3 cos 14/3 ; 15921/3540992 sin 16/3 ; 0-5307/3540992r3 cos 16/3
[vnotch90 primal j=2 h=0 f=7]
-45069/1703936 sin 1/3 ; 0+15023/1703936r3 cos 1/3 ; 2601/131072 sin 5/3 ; 0+867/131072r3 cos 5/3 ; -2002421/95420416 sin 7/3 ; 0+2002421/286261248r3 cos 7/3 ; 2211/262144 sin 11/3 ; 0+737/262144r3 cos 11/3 ; -17359197/1812987904 sin 13/3 ; 0+5786399/1812987904r3 cos 13/3 ; 429/262144 sin 17/3 ; 0+143/262144r3 cos 17/3 ; -652761/311607296 sin 19/3 ; 0+217587/311607296r3 cos 19/3 ; -4139/68485120 sin 25/3 ; 0+4139/205455360r3 cos 25/3
[vnotch90 primal j=2 h=0 f=8]
-22023/1064960 sin 2/3 ; 0-7341/1064960r3 cos 2/3 ; 4616423/218103808 sin 4/3 ; 0-4616423/654311424r3 cos 4/3 ; -132957/10485760 sin 8/3 ; 0-44319/10485760r3 cos 8/3 ; 49508365/3625975808 sin 10/3 ; 0-49508365/10877927424r3 cos 10/3 ; -16731/3670016 sin 14/3 ; 0-5577/3670016r3 cos 14/3 ; 837057189/159542935552 sin 16/3 ; 0-279019063/159542935552r3 cos 16/3 ; -6435/8388608 sin 20/3 ; 0-2145/8388608r3 cos 20/3 ; 11327483/11331174400 sin 22/3 ; 0-11327483/33993523200r3 cos 22/3
[vnotch90 primal j=2 h=0 f=9]
-16484499/872415232 sin 1/3 ; 0+5494833/872415232r3 cos 1/3 ; 126555/8388608 sin 5/3 ; 0+42185/8388608r3 cos 5/3 ; -260591535/16575889408 sin 7/3 ; 0+86863845/16575889408r3 cos 7/3 ; 65637/8388608 sin 11/3 ; 0+21879/8388608r3 cos 11/3 ; -5454781245/638171742208 sin 13/3 ; 0+1818260415/638171742208r3 cos 13/3 ; 572715/234881024 sin 17/3 ; 0+190905/234881024r3 cos 17/3 ; -45322598907/15954293555200 sin 19/3 ; 0+15107532969/15954293555200r3 cos 19/3 ; 12155/33554432 sin 23/3 ; 0+12155/100663296r3 cos 23/3 ; -600356599/1269091532800 sin 25/3 ; 0+600356599/3807274598400r3 cos 25/3 ; -134768503/13960006860800 sin 31/3 ; 0+134768503/41880020582400r3 cos 31/3
[vnotch90 primal j=2 h=0 f=10]
-54077199/3489660928 sin 2/3 ; 0-18025733/3489660928r3 cos 2/3 ; 261505557/16575889408 sin 4/3 ; 0-87168519/16575889408r3 cos 4/3 ; -307263/29360128 sin 8/3 ; 0-102421/29360128r3 cos 8/3 ; 4034758545/364669566976 sin 10/3 ; 0-1344919515/364669566976r3 cos 10/3 ; -2209779/469762048 sin 14/3 ; 0-736593/469762048r3 cos 14/3 ; 518613099/99714334720 sin 16/3 ; 0-172871033/99714334720r3 cos 16/3 ; -303875/234881024 sin 20/3 ; 0-303875/704643072r3 cos 20/3 ; 2719086026343/1786880878182400 sin 22/3 ; 0-906362008781/1786880878182400r3 cos 22/3 ; -46189/268435456 sin 26/3 ; 0-46189/805306368r3 cos 26/3 ; 7032308149/30911443763200 sin 28/3 ; 0-7032308149/92734331289600r3 cos 28/3
[vnotch90 primal j=2 h=2 f=0]
-3/28 sin 4/3 ; 0+1/28r3 cos 4/3
[vnotch90 primal j=2 h=2 f=1]
9/112 sin 1/3 ; 0-3/112r3 cos 1/3 ; 3/35 sin 7/3 ; 0-1/35r3 cos 7/3 ; 291/7280 sin 13/3 ; 0-97/7280r3 cos 13/3
[vnotch90 primal j=2 h=2 f=2]
45/896 sin 2/3 ; 0+15/896r3 cos 2/3 ; -423/4480 sin 4/3 ; 0+141/4480r3 cos 4/3 ; -369/5824 sin 10/3 ; 0+123/5824r3 cos 10/3
[vnotch90 primal j=2 h=2 f=3]
279/3584 sin 1/3 ; 0-93/3584r3 cos 1/3 ; -15/512 sin 5/3 ; 0-5/512r3 cos 5/3 ; 1899/23296 sin 7/3 ; 0-633/23296r3 cos 7/3 ; 65517/1863680 sin 13/3 ; 0-21839/1863680r3 cos 13/3 ; 206361/35409920 sin 19/3 ; 0-68787/35409920r3 cos 19/3
[vnotch90 primal j=2 h=2 f=4]
231/4096 sin 2/3 ; 0+77/4096r3 cos 2/3 ; -151491/1863680 sin 4/3 ; 0+50497/1863680r3 cos 4/3 ; 135/8192 sin 8/3 ; 0+45/8192r3 cos 8/3 ; -9621/163840 sin 10/3 ; 0+3207/163840r3 cos 10/3 ; -2253/110656 sin 16/3 ; 0+751/110656r3 cos 16/3
[vnotch90 primal j=2 h=2 f=5]
148527/2129920 sin 1/3 ; 0-49509/2129920r3 cos 1/3 ; -621/16384 sin 5/3 ; 0-207/16384r3 cos 5/3 ; 64107/917504 sin 7/3 ; 0-21369/917504r3 cos 7/3 ; -297/32768 sin 11/3 ; 0-99/32768r3 cos 11/3 ; 3413871/87162880 sin 13/3 ; 0-1137957/87162880r3 cos 13/3 ; 66512931/6232145920 sin 19/3 ; 0-22170977/6232145920r3 cos 19/3 ; 28872201/31160729600 sin 25/3 ; 0-9624067/31160729600r3 cos 25/3
[vnotch90 primal j=2 h=2 f=6]
17793/327680 sin 2/3 ; 0+5931/327680r3 cos 2/3 ; -8288109/119275520 sin 4/3 ; 0+2762703/119275520r3 cos 4/3 ; 31779/1310720 sin 8/3 ; 0+10593/1310720r3 cos 8/3 ; -97588107/1812987904 sin 10/3 ; 0+32529369/1812987904r3 cos 10/3 ; 1287/262144 sin 14/3 ; 0+429/262144r3 cos 14/3 ; -2449154637/99714334720 sin 16/3 ; 0+816384879/99714334720r3 cos 16/3 ; -163446093/28327936000 sin 22/3 ; 0+54482031/28327936000r3 cos 22/3
[vnotch90 primal j=2 h=2 f=7]
234926973/3816816640 sin 1/3 ; 0-78308991/3816816640r3 cos 1/3 ; -1347093/34078720 sin 5/3 ; 0-449031/34078720r3 cos 5/3 ; 4411964967/72519516160 sin 7/3 ; 0-1470654989/72519516160r3 cos 7/3 ; -78507/5242880 sin 11/3 ; 0-26169/5242880r3 cos 11/3 ; 3838370331/99714334720 sin 13/3 ; 0-1279456777/99714334720r3 cos 13/3 ; -19305/7340032 sin 17/3 ; 0-6435/7340032r3 cos 17/3 ; 13494649653/906493952000 sin 19/3 ; 0-4498216551/906493952000r3 cos 19/3 ; 103479201669/34900017152000 sin 25/3 ; 0-34493067223/34900017152000r3 cos 25/3 ; 175232851593/1081900531712000 sin 31/3 ; 0-58410950531/1081900531712000r3 cos 31/3
[vnotch90 primal j=2 h=2 f=8]
306813771/6106906624 sin 2/3 ; 0+102271257/6106906624r3 cos 2/3 ; -1925208081/31876710400 sin 4/3 ; 0+641736027/31876710400r3 cos 4/3 ; 8040681/293601280 sin 8/3 ; 0+2680227/293601280r3 cos 8/3 ; -31129331199/638171742208 sin 10/3 ; 0+10376443733/638171742208r3 cos 10/3 ; 528957/58720256 sin 14/3 ; 0+176319/58720256r3 cos 14/3 ; -109748313309/4198498304000 sin 16/3 ; 0+36582771103/4198498304000r3 cos 16/3 ; 328185/234881024 sin 20/3 ; 0+109395/234881024r3 cos 20/3 ; -9777404179287/1116800548864000 sin 22/3 ; 0+3259134726429/1116800548864000r3 cos 22/3 ; -30085504461/19319652352000 sin 28/3 ; 0+10028501487/19319652352000r3 cos 28/3
[vnotch90 primal j=2 h=4 f=0]
9/2240 sin 4/3 ; 0-3/2240r3 cos 4/3
[vnotch90 primal j=2 h=4 f=1]
-9/1792 sin 1/3 ; 0+3/1792r3 cos 1/3 ; -135/23296 sin 7/3 ; 0+45/23296r3 cos 7/3 ; -873/465920 sin 13/3 ; 0+291/465920r3 cos 13/3 ; 5211/8852480 sin 19/3 ; 0-1737/8852480r3 cos 19/3
[vnotch90 primal j=2 h=4 f=2]
-9/2048 sin 2/3 ; 0-3/2048r3 cos 2/3 ; 423/46592 sin 4/3 ; 0-141/46592r3 cos 4/3 ; 51543/7454720 sin 10/3 ; 0-17181/7454720r3 cos 10/3 ; 333/221312 sin 16/3 ; 0-111/221312r3 cos 16/3
[vnotch90 primal j=2 h=4 f=3]
-1017/106496 sin 1/3 ; 0+339/106496r3 cos 1/3 ; 27/8192 sin 5/3 ; 0+9/8192r3 cos 5/3 ; -67203/5963776 sin 7/3 ; 0+22401/5963776r3 cos 7/3 ; -3483891/566558720 sin 13/3 ; 0+1161297/566558720r3 cos 13/3 ; -3865131/3116072960 sin 19/3 ; 0+1288377/3116072960r3 cos 19/3 ; 2194893/15580364800 sin 25/3 ; 0-731631/15580364800r3 cos 25/3
[vnotch90 primal j=2 h=4 f=4]
-891/106496 sin 2/3 ; 0-297/106496r3 cos 2/3 ; 226431/17039360 sin 4/3 ; 0-75477/17039360r3 cos 4/3 ; -297/131072 sin 8/3 ; 0-99/131072r3 cos 8/3 ; 630243/56655872 sin 10/3 ; 0-210081/56655872r3 cos 10/3 ; 34534827/7122452480 sin 16/3 ; 0-11511609/7122452480r3 cos 16/3 ; 146313/186368000 sin 22/3 ; 0-48771/186368000r3 cos 22/3
[vnotch90 primal j=2 h=4 f=5]
-1785483/136314880 sin 1/3 ; 0+595161/136314880r3 cos 1/3 ; 44847/6815744 sin 5/3 ; 0+14949/6815744r3 cos 5/3 ; -37912779/2589982720 sin 7/3 ; 0+12637593/2589982720r3 cos 7/3 ; 3861/2621440 sin 11/3 ; 0+1287/2621440r3 cos 11/3 ; -1916639757/199428669440 sin 13/3 ; 0+638879919/199428669440r3 cos 13/3 ; -265463271/76703334400 sin 19/3 ; 0+88487757/76703334400r3 cos 19/3 ; -8764635519/17450008576000 sin 25/3 ; 0+2921545173/17450008576000r3 cos 25/3 ; 3257119557/108190053171200 sin 31/3 ; 0-1085706519/108190053171200r3 cos 31/3
[vnotch90 primal j=2 h=4 f=6]
-25089669/2181038080 sin 2/3 ; 0-8363223/2181038080r3 cos 2/3 ; 145306197/9064939520 sin 4/3 ; 0-48435399/9064939520r3 cos 4/3 ; -5049/1048576 sin 8/3 ; 0-1683/1048576r3 cos 8/3 ; 636493815/45583695872 sin 10/3 ; 0-212164605/45583695872r3 cos 10/3 ; -3861/4194304 sin 14/3 ; 0-1287/4194304r3 cos 14/3 ; 75382646067/9971433472000 sin 16/3 ; 0-25127548689/9971433472000r3 cos 16/3 ; 1958447943/839699660800 sin 22/3 ; 0-652815981/839699660800r3 cos 22/3 ; 3207186981/11039801344000 sin 28/3 ; 0-1069062327/11039801344000r3 cos 28/3
[vnotch90 primal j=2 h=6 f=0]
-9/116480 sin 4/3 ; 0+3/116480r3 cos 4/3
[vnotch90 primal j=2 h=6 f=1]
9/66560 sin 1/3 ; 0-3/66560r3 cos 1/3 ; 9/57344 sin 7/3 ; 0-3/57344r3 cos 7/3 ; 2619/70819840 sin 13/3 ; 0-873/70819840r3 cos 13/3 ; -15633/779018240 sin 19/3 ; 0+5211/779018240r3 cos 19/3
[vnotch90 primal j=2 h=6 f=2]
81/532480 sin 2/3 ; 0+27/532480r3 cos 2/3 ; -1377/4259840 sin 4/3 ; 0+459/4259840r3 cos 4/3 ; -27459/113311744 sin 10/3 ; 0+9153/113311744r3 cos 10/3 ; -4509/97377280 sin 16/3 ; 0+1503/97377280r3 cos 16/3 ; 15633/856064000 sin 22/3 ; 0-5211/856064000r3 cos 22/3
[vnotch90 primal j=2 h=6 f=3]
891/2129920 sin 1/3 ; 0-297/2129920r3 cos 1/3 ; -297/2129920 sin 5/3 ; 0-99/2129920r3 cos 5/3 ; 8613/17039360 sin 7/3 ; 0-2871/17039360r3 cos 7/3 ; 3503133/12464291840 sin 13/3 ; 0-1167711/12464291840r3 cos 13/3 ; 3693897/77901824000 sin 19/3 ; 0-1231299/77901824000r3 cos 19/3 ; -71356977/4362502144000 sin 25/3 ; 0+23785659/4362502144000r3 cos 25/3 ; -172227879/67618783232000 sin 31/3 ; 0+57409293/67618783232000r3 cos 31/3
[vnotch90 primal j=2 h=6 f=4]
59103/136314880 sin 2/3 ; 0+19701/136314880r3 cos 2/3 ; -2302263/3237478400 sin 4/3 ; 0+767421/3237478400r3 cos 4/3 ; 297/2621440 sin 8/3 ; 0+99/2621440r3 cos 8/3 ; -879345/1424490496 sin 10/3 ; 0+293115/1424490496r3 cos 10/3 ; -106107633/383516672000 sin 16/3 ; 0+35369211/383516672000r3 cos 16/3 ; -196438581/4985716736000 sin 22/3 ; 0+65479527/4985716736000r3 cos 22/3 ; 919909323/77278609408000 sin 28/3 ; 0-306636441/77278609408000r3 cos 28/3
[vnotch90 primal j=2 h=8 f=0]
27/29818880 sin 4/3 ; 0-9/29818880r3 cos 4/3
[vnotch90 primal j=2 h=8 f=1]
-243/119275520 sin 1/3 ; 0+81/119275520r3 cos 1/3 ; -5319/2266234880 sin 7/3 ; 0+1773/2266234880r3 cos 7/3 ; -2619/6232145920 sin 13/3 ; 0+873/6232145920r3 cos 13/3 ; 46899/155803648000 sin 19/3 ; 0-15633/155803648000r3 cos 19/3
[vnotch90 primal j=2 h=8 f=2]
-2673/954204160 sin 2/3 ; 0-891/954204160r3 cos 2/3 ; 243/40468480 sin 4/3 ; 0-81/40468480r3 cos 4/3 ; 7857/1812987904 sin 10/3 ; 0-2619/1812987904r3 cos 10/3 ; 12069/19475456000 sin 16/3 ; 0-4023/19475456000r3 cos 16/3 ; -4549203/8725004288000 sin 22/3 ; 0+1516401/8725004288000r3 cos 22/3
[vnotch90 primal j=2 h=10 f=0]
-81/11331174400 sin 4/3 ; 0+27/11331174400r3 cos 4/3

# j = 3
[vnotch90 primal j=3 h=0 f=0]
1 cos 6/3
[vnotch90 primal j=3 h=0 f=1]
-1/4 cos 3/3 ; -1/12 cos 9/3
[vnotch90 primal j=3 h=0 f=2]
3/32 cos 0/3 ; 1/8 cos 6/3
[vnotch90 primal j=3 h=0 f=3]
-1/8 cos 3/3 ; -7/128 cos 9/3 ; -1/128 cos 15/3
[vnotch90 primal j=3 h=0 f=4]
5/96 cos 0/3 ; 77/1024 cos 6/3 ; 17/640 cos 12/3
[vnotch90 primal j=3 h=0 f=5]
-315/4096 cos 3/3 ; -897/20480 cos 9/3 ; -187/15360 cos 15/3 ; -7/7680 cos 21/3
[vnotch90 primal j=3 h=0 f=6]
2205/65536 cos 0/3 ; 433/8192 cos 6/3 ; 4037/163840 cos 12/3 ; 843/143360 cos 18/3
[vnotch90 primal j=3 h=0 f=7]
-875/16384 cos 3/3 ; -4521/131072 cos 9/3 ; -62597/4587520 cos 15/3 ; -2529/917504 cos 21/3 ; -349/2752512 cos 27/3
[vnotch90 primal j=3 h=0 f=8]
1575/65536 cos 0/3 ; 248941/6291456 cos 6/3 ; 59729/2752512 cos 12/3 ; 218139/29360128 cos 18/3 ; 1835/1376256 cos 24/3
[vnotch90 primal j=3 h=0 f=9]
-1670823/41943040 cos 3/3 ; -233745/8388608 cos 9/3 ; -1558145/117440512 cos 15/3 ; -1412281/352321536 cos 21/3 ; -6973/11010048 cos 27/3 ; -2201/110100480 cos 33/3
[vnotch90 primal j=3 h=2 f=0]
-1/12 cos 6/3
[vnotch90 primal j=3 h=2 f=1]
1/16 cos 3/3 ; 7/96 cos 9/3 ; 1/32 cos 15/3
[vnotch90 primal j=3 h=2 f=2]
-5/128 cos 0/3 ; -61/768 cos 6/3 ; -53/960 cos 12/3
[vnotch90 primal j=3 h=2 f=3]
45/512 cos 3/3 ; 137/1920 cos 9/3 ; 487/15360 cos 15/3 ; 71/15360 cos 21/3
[vnotch90 primal j=3 h=2 f=4]
-385/8192 cos 0/3 ; -15437/184320 cos 6/3 ; -19523/368640 cos 12/3 ; -143/7680 cos 18/3
[vnotch90 primal j=3 h=2 f=5]
67949/737280 cos 3/3 ; 309119/4423680 cos 9/3 ; 372203/10321920 cos 15/3 ; 2447/245760 cos 21/3 ; 2365/3096576 cos 27/3
[vnotch90 primal j=3 h=2 f=6]
-61733/1310720 cos 0/3 ; -648079/7864320 cos 6/3 ; -2200529/41287680 cos 12/3 ; -844089/36700160 cos 18/3 ; -168421/30965760 cos 24/3
[vnotch90 primal j=3 h=2 f=7]
2806877/31457280 cos 3/3 ; 6434681/94371840 cos 9/3 ; 10053427/264241152 cos 15/3 ; 55988167/3963617280 cos 21/3 ; 2806673/990904320 cos 27/3 ; 301339/2179989504 cos 33/3
[vnotch90 primal j=3 h=4 f=0]
1/384 cos 6/3
[vnotch90 primal j=3 h=4 f=1]
-5/1536 cos 3/3 ; -31/7680 cos 9/3 ; -1/768 cos 15/3 ; 3/8960 cos 21/3
[vnotch90 primal j=3 h=4 f=2]
35/12288 cos 0/3 ; 29/4608 cos 6/3 ; 923/184320 cos 12/3 ; 29/26880 cos 18/3
[vnotch90 primal j=3 h=4 f=3]
-161/18432 cos 3/3 ; -3611/442368 cos 9/3 ; -23633/5160960 cos 15/3 ; -3077/3440640 cos 21/3 ; 9103/92897280 cos 27/3
[vnotch90 primal j=3 h=4 f=4]
189/32768 cos 0/3 ; 391699/35389440 cos 6/3 ; 17161/2064384 cos 12/3 ; 67513/18350080 cos 18/3 ; 1325/2322432 cos 24/3
[vnotch90 primal j=3 h=4 f=5]
-73213/5242880 cos 3/3 ; -1681349/141557760 cos 9/3 ; -138697/18874368 cos 15/3 ; -5281387/1981808640 cos 21/3 ; -683371/1857945600 cos 27/3 ; 334729/13624934400 cos 33/3
[vnotch90 primal j=3 h=6 f=0]
-1/23040 cos 6/3
[vnotch90 primal j=3 h=6 f=1]
7/92160 cos 3/3 ; 13/138240 cos 9/3 ; 1/43008 cos 15/3 ; -3/286720 cos 21/3 ; 43/23224320 cos 27/3
[vnotch90 primal j=3 h=6 f=2]
-7/81920 cos 0/3 ; -427/2211840 cos 6/3 ; -787/5160960 cos 12/3 ; -9/286720 cos 18/3 ; 53/5806080 cos 24/3
[vnotch90 primal j=3 h=6 f=3]
161/491520 cos 3/3 ; 2801/8847360 cos 9/3 ; 3035/16515072 cos 15/3 ; 2767/82575360 cos 21/3 ; -1571/176947200 cos 27/3 ; -7361/4541644800 cos 33/3
[vnotch90 primal j=3 h=8 f=0]
1/2211840 cos 6/3
[vnotch90 primal j=3 h=8 f=1]
-1/983040 cos 3/3 ; -11/8847360 cos 9/3 ; -1/4128768 cos 15/3 ; 1/6881280 cos 21/3 ; -43/928972800 cos 27/3 ; 1/162201600 cos 33/3

# j = 4
[vnotch90 primal j=4 h=0 f=0]
1 sin 8/3 ; 0+1/3r3 cos 8/3
[vnotch90 primal j=4 h=0 f=1]
-1/4 sin 5/3 ; 0-1/12r3 cos 5/3 ; -5/44 sin 11/3 ; 0-5/132r3 cos 11/3
[vnotch90 primal j=4 h=0 f=2]
3/32 sin 2/3 ; 0+1/32r3 cos 2/3 ; 3/22 sin 8/3 ; 0+1/22r3 cos 8/3
[vnotch90 primal j=4 h=0 f=3]
5/128 sin 1/3 ; 0-5/384r3 cos 1/3 ; -129/1408 sin 5/3 ; 0-43/1408r3 cos 5/3 ; -75/1232 sin 11/3 ; 0-25/1232r3 cos 11/3 ; -25/2464 sin 17/3 ; 0-25/7392r3 cos 17/3
[vnotch90 primal j=4 h=0 f=4]
155/2816 sin 2/3 ; 0+155/8448r3 cos 2/3 ; -35/2048 sin 4/3 ; 0+35/6144r3 cos 4/3 ; 5025/78848 sin 8/3 ; 0+1675/78848r3 cos 8/3 ; 725/23936 sin 14/3 ; 0+725/71808r3 cos 14/3
[vnotch90 primal j=4 h=0 f=5]
2835/90112 sin 1/3 ; 0-945/90112r3 cos 1/3 ; -16125/315392 sin 5/3 ; 0-5375/315392r3 cos 5/3 ; 63/8192 sin 7/3 ; 0-21/8192r3 cos 7/3 ; -216675/5361664 sin 11/3 ; 0-72225/5361664r3 cos 11/3 ; -5365/382976 sin 17/3 ; 0-5365/1148928r3 cos 17/3 ; -3133/2680832 sin 23/3 ; 0-3133/8042496r3 cos 23/3
[vnotch90 primal j=4 h=0 f=6]
13125/360448 sin 2/3 ; 0+4375/360448r3 cos 2/3 ; -1575/90112 sin 4/3 ; 0+525/90112r3 cos 4/3 ; 15375/382976 sin 8/3 ; 0+5125/382976r3 cos 8/3 ; -231/65536 sin 10/3 ; 0+77/65536r3 cos 10/3 ; 2054055/85786624 sin 14/3 ; 0+684685/85786624r3 cos 14/3 ; 421731/61659136 sin 20/3 ; 0+140577/61659136r3 cos 20/3
[vnotch90 primal j=4 h=0 f=7]
34875/1441792 sin 1/3 ; 0-11625/1441792r3 cos 1/3 ; -76125/2228224 sin 5/3 ; 0-25375/2228224r3 cos 5/3 ; 2499/262144 sin 7/3 ; 0-833/262144r3 cos 7/3 ; -9794825/343146496 sin 11/3 ; 0-9794825/1029439488r3 cos 11/3 ; 429/262144 sin 13/3 ; 0-143/262144r3 cos 13/3 ; -108567453/7892369408 sin 17/3 ; 0-36189151/7892369408r3 cos 17/3 ; -2952117/916078592 sin 23/3 ; 0-984039/916078592r3 cos 23/3 ; -129905/801568768 sin 29/3 ; 0-129905/2404706304r3 cos 29/3
[vnotch90 primal j=4 h=0 f=8]
161775/6127616 sin 2/3 ; 0+53925/6127616r3 cos 2/3 ; -32175/2097152 sin 4/3 ; 0+10725/2097152r3 cos 4/3 ; 1305175/46137344 sin 8/3 ; 0+1305175/138412032r3 cos 8/3 ; -2691/524288 sin 10/3 ; 0+897/524288r3 cos 10/3 ; 301061615/15784738816 sin 14/3 ; 0+301061615/47354216448r3 cos 14/3 ; -6435/8388608 sin 16/3 ; 0+2145/8388608r3 cos 16/3 ; 901673787/117258059776 sin 20/3 ; 0+300557929/117258059776r3 cos 20/3 ; 89746385/57219678208 sin 26/3 ; 0+89746385/171659034624r3 cos 26/3
[vnotch90 primal j=4 h=2 f=0]
-3/44 sin 8/3 ; 0-1/44r3 cos 8/3
[vnotch90 primal j=4 h=2 f=1]
9/176 sin 5/3 ; 0+3/176r3 cos 5/3 ; 39/616 sin 11/3 ; 0+13/616r3 cos 11/3
[vnotch90 primal j=4 h=2 f=2]
-45/1408 sin 2/3 ; 0-15/1408r3 cos 2/3 ; -675/9856 sin 8/3 ; 0-225/9856r3 cos 8/3 ; -111/2618 sin 14/3 ; 0-37/2618r3 cos 14/3
[vnotch90 primal j=4 h=2 f=3]
-105/5632 sin 1/3 ; 0+35/5632r3 cos 1/3 ; 315/5632 sin 5/3 ; 0+105/5632r3 cos 5/3 ; 40797/670208 sin 11/3 ; 0+13599/670208r3 cos 11/3 ; 17253/670208 sin 17/3 ; 0+5751/670208r3 cos 17/3
[vnotch90 primal j=4 h=2 f=4]
-165/4096 sin 2/3 ; 0-55/4096r3 cos 2/3 ; 945/90112 sin 4/3 ; 0-315/90112r3 cos 4/3 ; -331281/5361664 sin 8/3 ; 0-110427/5361664r3 cos 8/3 ; -490617/10723328 sin 14/3 ; 0-163539/10723328r3 cos 14/3 ; -906303/61659136 sin 20/3 ; 0-302101/61659136r3 cos 20/3
[vnotch90 primal j=4 h=2 f=5]
-1215/45056 sin 1/3 ; 0+405/45056r3 cos 1/3 ; 159/2992 sin 5/3 ; 0+53/2992r3 cos 5/3 ; -189/32768 sin 7/3 ; 0+63/32768r3 cos 7/3 ; 2972349/53616640 sin 11/3 ; 0+990783/53616640r3 cos 11/3 ; 30825423/986546176 sin 17/3 ; 0+10275141/986546176r3 cos 17/3 ; 465969/57254912 sin 23/3 ; 0+155323/57254912r3 cos 23/3
[vnotch90 primal j=4 h=2 f=6]
-1013229/24510464 sin 2/3 ; 0-337743/24510464r3 cos 2/3 ; 4509/262144 sin 4/3 ; 0-1503/262144r3 cos 4/3 ; -47546283/857866240 sin 8/3 ; 0-15848761/857866240r3 cos 8/3 ; 819/262144 sin 10/3 ; 0-273/262144r3 cos 10/3 ; -1737507501/39461847040 sin 14/3 ; 0-579169167/39461847040r3 cos 14/3 ; -2062206567/102600802304 sin 20/3 ; 0-687402189/102600802304r3 cos 20/3 ; -116961159/26566279168 sin 26/3 ; 0-38987053/26566279168r3 cos 26/3
[vnotch90 primal j=4 h=4 f=0]
9/4928 sin 8/3 ; 0+3/4928r3 cos 8/3
[vnotch90 primal j=4 h=4 f=1]
-45/19712 sin 5/3 ; 0-15/19712r3 cos 5/3 ; -999/335104 sin 11/3 ; 0-333/335104r3 cos 11/3 ; 1791/1926848 sin 23/3 ; 0+597/1926848r3 cos 23/3
[vnotch90 primal j=4 h=4 f=2]
45/22528 sin 2/3 ; 0+15/22528r3 cos 2/3 ; 3105/670208 sin 8/3 ; 0+1035/670208r3 cos 8/3 ; 16551/5361664 sin 14/3 ; 0+5517/5361664r3 cos 14/3 ; -1791/7707392 sin 20/3 ; 0-597/7707392r3 cos 20/3
[vnotch90 primal j=4 h=4 f=3]
135/90112 sin 1/3 ; 0-45/90112r3 cos 1/3 ; -675/139264 sin 5/3 ; 0-225/139264r3 cos 5/3 ; -123489/21446656 sin 11/3 ; 0-41163/21446656r3 cos 11/3 ; -1242081/493273088 sin 17/3 ; 0-414027/493273088r3 cos 17/3 ; 12537/114509824 sin 23/3 ; 0+4179/114509824r3 cos 23/3 ; 1125099/4226453504 sin 29/3 ; 0+375033/4226453504r3 cos 29/3
[vnotch90 primal j=4 h=4 f=4]
405/95744 sin 2/3 ; 0+135/95744r3 cos 2/3 ; -135/131072 sin 4/3 ; 0+45/131072r3 cos 4/3 ; 430461/61276160 sin 8/3 ; 0+143487/61276160r3 cos 8/3 ; 2780973/493273088 sin 14/3 ; 0+926991/493273088r3 cos 14/3 ; 96006501/51300401152 sin 20/3 ; 0+32002167/51300401152r3 cos 20/3 ; -154053/1300447232 sin 26/3 ; 0-51351/1300447232r3 cos 26/3
[vnotch90 primal j=4 h=4 f=5]
29565/8912896 sin 1/3 ; 0-9855/8912896r3 cos 1/3 ; -1716309/245104640 sin 5/3 ; 0-572103/245104640r3 cos 5/3 ; 351/524288 sin 7/3 ; 0-117/524288r3 cos 7/3 ; -8904609/1127481344 sin 11/3 ; 0-2968203/1127481344r3 cos 11/3 ; -988611633/205201604608 sin 17/3 ; 0-329537211/205201604608r3 cos 17/3 ; -7579303839/5950846533632 sin 23/3 ; 0-2526434613/5950846533632r3 cos 23/3 ; 9397233/166457245696 sin 29/3 ; 0+3132411/166457245696r3 cos 29/3 ; 243681759/3769767034880 sin 35/3 ; 0+81227253/3769767034880r3 cos 35/3
[vnotch90 primal j=4 h=6 f=0]
-9/335104 sin 8/3 ; 0-3/335104r3 cos 8/3
[vnotch90 primal j=4 h=6 f=1]
9/191488 sin 5/3 ; 0+3/191488r3 cos 5/3 ; 117/1914880 sin 11/3 ; 0+39/1914880r3 cos 11/3 ; -5373/200392192 sin 23/3 ; 0-1791/200392192r3 cos 23/3
[vnotch90 primal j=4 h=6 f=2]
-81/1531904 sin 2/3 ; 0-27/1531904r3 cos 2/3 ; -1917/15319040 sin 8/3 ; 0-639/15319040r3 cos 8/3 ; -205389/2466365440 sin 14/3 ; 0-68463/2466365440r3 cos 14/3 ; 16119/801568768 sin 20/3 ; 0+5373/801568768r3 cos 20/3 ; 574911/23245494272 sin 26/3 ; 0+191637/23245494272r3 cos 26/3
[vnotch90 primal j=4 h=6 f=3]
-27/557056 sin 1/3 ; 0+9/557056r3 cos 1/3 ; 4941/30638080 sin 5/3 ; 0+1647/30638080r3 cos 5/3 ; 34479/176168960 sin 11/3 ; 0+11493/176168960r3 cos 11/3 ; 4868379/64125501440 sin 17/3 ; 0+1622793/64125501440r3 cos 17/3 ; -80595/2905686784 sin 23/3 ; 0-26865/2905686784r3 cos 23/3 ; -139677345/5950846533632 sin 29/3 ; 0-46559115/5950846533632r3 cos 29/3
[vnotch90 primal j=4 h=8 f=0]
27/107233280 sin 8/3 ; 0+9/107233280r3 cos 8/3
[vnotch90 primal j=4 h=8 f=1]
-243/428933120 sin 5/3 ; 0-81/428933120r3 cos 5/3 ; -1431/1973092352 sin 11/3 ; 0-477/1973092352r3 cos 11/3 ; 16119/46490988544 sin 23/3 ; 0+5373/46490988544r3 cos 23/3

# j = 5
[vnotch90 primal j=5 h=0 f=0]
1 sin 10/3 ; 0-1/3r3 cos 10/3
[vnotch90 primal j=5 h=0 f=1]
-1/4 sin 7/3 ; 0+1/12r3 cos 7/3 ; -7/52 sin 13/3 ; 0+7/156r3 cos 13/3
[vnotch90 primal j=5 h=0 f=2]
3/32 sin 4/3 ; 0-1/32r3 cos 4/3 ; 15/104 sin 10/3 ; 0-5/104r3 cos 10/3
[vnotch90 primal j=5 h=0 f=3]
-5/128 sin 1/3 ; 0+5/384r3 cos 1/3 ; -159/1664 sin 7/3 ; 0+53/1664r3 cos 7/3 ; -435/6656 sin 13/3 ; 0+145/6656r3 cos 13/3 ; -77/6656 sin 19/3 ; 0+77/19968r3 cos 19/3
[vnotch90 primal j=5 h=0 f=4]
-35/2048 sin 2/3 ; 0-35/6144r3 cos 2/3 ; 95/1664 sin 4/3 ; 0-95/4992r3 cos 4/3 ; 7221/106496 sin 10/3 ; 0-2407/106496r3 cos 10/3 ; 1043/31616 sin 16/3 ; 0-1043/94848r3 cos 16/3
[vnotch90 primal j=5 h=0 f=5]
-3465/106496 sin 1/3 ; 0+1155/106496r3 cos 1/3 ; 63/8192 sin 5/3 ; 0+21/8192r3 cos 5/3 ; -23055/425984 sin 7/3 ; 0+7685/425984r3 cos 7/3 ; -352863/8093696 sin 13/3 ; 0+117621/8093696r3 cos 13/3 ; -42763/2782208 sin 19/3 ; 0+42763/8346624r3 cos 19/3 ; -14749/11128832 sin 25/3 ; 0+14749/33386496r3 cos 25/3
[vnotch90 primal j=5 h=0 f=6]
-3843/212992 sin 2/3 ; 0-1281/212992r3 cos 2/3 ; 130935/3407872 sin 4/3 ; 0-43645/3407872r3 cos 4/3 ; -231/65536 sin 8/3 ; 0-77/65536r3 cos 8/3 ; 53655/1245184 sin 10/3 ; 0-17885/1245184r3 cos 10/3 ; 1688421/64749568 sin 16/3 ; 0-562807/64749568r3 cos 16/3 ; 764379/101171200 sin 22/3 ; 0-254793/101171200r3 cos 22/3
[vnotch90 primal j=5 h=0 f=7]
-173565/6815744 sin 1/3 ; 0+57855/6815744r3 cos 1/3 ; 33495/3407872 sin 5/3 ; 0+11165/3407872r3 cos 5/3 ; -4732665/129499136 sin 7/3 ; 0+1577555/129499136r3 cos 7/3 ; 429/262144 sin 11/3 ; 0+143/262144r3 cos 11/3 ; -88150615/2848980992 sin 13/3 ; 0+88150615/8546942976r3 cos 13/3 ; -97700883/6474956800 sin 19/3 ; 0+32566961/6474956800r3 cos 19/3 ; -5787441/1618739200 sin 25/3 ; 0+1929147/1618739200r3 cos 25/3 ; -3279997/17806131200 sin 31/3 ; 0+3279997/53418393600r3 cos 31/3
[vnotch90 primal j=5 h=0 f=8]
-3516975/218103808 sin 2/3 ; 0-1172325/218103808r3 cos 2/3 ; 3648393/129499136 sin 4/3 ; 0-1216131/129499136r3 cos 4/3 ; -693/131072 sin 8/3 ; 0-231/131072r3 cos 8/3 ; 107170105/3506438144 sin 10/3 ; 0-107170105/10519314432r3 cos 10/3 ; -6435/8388608 sin 14/3 ; 0-2145/8388608r3 cos 14/3 ; 2318071/111288320 sin 16/3 ; 0-2318071/333864960r3 cos 16/3 ; 878633841/103599308800 sin 22/3 ; 0-292877947/103599308800r3 cos 22/3 ; 964432279/551990067200 sin 28/3 ; 0-964432279/1655970201600r3 cos 28/3

# j = 6
[vnotch90 primal j=6 h=0 f=0]
1 cos 12/3
[vnotch90 primal j=6 h=0 f=1]
-1/4 cos 9/3 ; -3/20 cos 15/3
[vnotch90 primal j=6 h=0 f=2]
3/32 cos 6/3 ; 3/20 cos 12/3
[vnotch90 primal j=6 h=0 f=3]
-5/128 cos 3/3 ; -63/640 cos 9/3 ; -11/160 cos 15/3 ; -1/80 cos 21/3
[vnotch90 primal j=6 h=0 f=4]
35/2048 cos 0/3 ; 15/256 cos 6/3 ; 363/5120 cos 12/3 ; 157/4480 cos 18/3
[vnotch90 primal j=6 h=0 f=5]
-21/512 cos 3/3 ; -231/4096 cos 9/3 ; -6603/143360 cos 15/3 ; -471/28672 cos 21/3 ; -41/28672 cos 27/3
[vnotch90 primal j=6 h=0 f=6]
189/10240 cos 0/3 ; 2849/65536 cos 6/3 ; 1301/28672 cos 12/3 ; 25461/917504 cos 18/3 ; 349/43008 cos 24/3
[vnotch90 primal j=6 h=0 f=7]
-47817/1310720 cos 3/3 ; -10495/262144 cos 9/3 ; -120495/3670016 cos 15/3 ; -59261/3670016 cos 21/3 ; -6631/1720320 cos 27/3 ; -229/1146880 cos 33/3

# j = 7
[vnotch90 primal j=7 h=0 f=0]
1 sin 14/3 ; 0+1/3r3 cos 14/3
[vnotch90 primal j=7 h=0 f=1]
-1/4 sin 11/3 ; 0-1/12r3 cos 11/3 ; -11/68 sin 17/3 ; 0-11/204r3 cos 17/3
[vnotch90 primal j=7 h=0 f=2]
3/32 sin 8/3 ; 0+1/32r3 cos 8/3 ; 21/136 sin 14/3 ; 0+7/136r3 cos 14/3
[vnotch90 primal j=7 h=0 f=3]
-5/128 sin 5/3 ; 0-5/384r3 cos 5/3 ; -219/2176 sin 11/3 ; 0-73/2176r3 cos 11/3 ; -777/10880 sin 17/3 ; 0-259/10880r3 cos 17/3 ; -143/10880 sin 23/3 ; 0-143/32640r3 cos 23/3
[vnotch90 primal j=7 h=0 f=4]
35/2048 sin 2/3 ; 0+35/6144r3 cos 2/3 ; 65/1088 sin 8/3 ; 0+65/3264r3 cos 8/3 ; 2553/34816 sin 14/3 ; 0+851/34816r3 cos 14/3 ; 1835/50048 sin 20/3 ; 0+1835/150144r3 cos 20/3
[vnotch90 primal j=7 h=0 f=5]
63/8192 sin 1/3 ; 0-21/8192r3 cos 1/3 ; -4725/139264 sin 5/3 ; 0-1575/139264r3 cos 5/3 ; -8103/139264 sin 11/3 ; 0-2701/139264r3 cos 11/3 ; -153819/3203072 sin 17/3 ; 0-51273/3203072r3 cos 17/3 ; -89915/5204992 sin 23/3 ; 0-89915/15614976r3 cos 23/3 ; -979/650624 sin 29/3 ; 0-979/1951872r3 cos 29/3
[vnotch90 primal j=7 h=0 f=6]
5229/278528 sin 2/3 ; 0+1743/278528r3 cos 2/3 ; -231/65536 sin 4/3 ; 0+77/65536r3 cos 4/3 ; 45843/1114112 sin 8/3 ; 0+15281/1114112r3 cos 8/3 ; 302397/6406144 sin 14/3 ; 0+100799/6406144r3 cos 14/3 ; 9695091/333119488 sin 20/3 ; 0+3231697/333119488r3 cos 20/3 ; 397881/46444544 sin 26/3 ; 0+132627/46444544r3 cos 26/3

# j = 8
[vnotch90 primal j=8 h=0 f=0]
1 sin 16/3 ; 0-1/3r3 cos 16/3
[vnotch90 primal j=8 h=0 f=1]
-1/4 sin 13/3 ; 0+1/12r3 cos 13/3 ; -13/76 sin 19/3 ; 0+13/228r3 cos 19/3
[vnotch90 primal j=8 h=0 f=2]
3/32 sin 10/3 ; 0-1/32r3 cos 10/3 ; 3/19 sin 16/3 ; 0-1/19r3 cos 16/3
[vnotch90 primal j=8 h=0 f=3]
-5/128 sin 7/3 ; 0+5/384r3 cos 7/3 ; -249/2432 sin 13/3 ; 0+83/2432r3 cos 13/3 ; -123/1672 sin 19/3 ; 0+41/1672r3 cos 19/3 ; -91/6688 sin 25/3 ; 0+91/20064r3 cos 25/3
[vnotch90 primal j=8 h=0 f=4]
35/2048 sin 4/3 ; 0-35/6144r3 cos 4/3 ; 295/4864 sin 10/3 ; 0-295/14592r3 cos 10/3 ; 16113/214016 sin 16/3 ; 0-5371/214016r3 cos 16/3 ; 2309/60800 sin 22/3 ; 0-2309/182400r3 cos 22/3
[vnotch90 primal j=8 h=0 f=5]
-63/8192 sin 1/3 ; 0+21/8192r3 cos 1/3 ; -5355/155648 sin 7/3 ; 0+1785/155648r3 cos 7/3 ; -51045/856064 sin 13/3 ; 0+17015/856064r3 cos 13/3 ; -1062099/21401600 sin 19/3 ; 0+354033/21401600r3 cos 19/3 ; -122377/6809600 sin 25/3 ; 0+122377/20428800r3 cos 25/3 ; -116909/74905600 sin 31/3 ; 0+116909/224716800r3 cos 31/3
[vnotch90 primal j=8 h=0 f=6]
-231/65536 sin 2/3 ; 0-77/65536r3 cos 2/3 ; 2961/155648 sin 4/3 ; 0-987/155648r3 cos 4/3 ; 288435/6848512 sin 10/3 ; 0-96145/6848512r3 cos 10/3 ; 13029/267520 sin 16/3 ; 0-4343/267520r3 cos 16/3 ; 72445011/2396979200 sin 22/3 ; 0-24148337/2396979200r3 cos 22/3 ; 2965959/331724800 sin 28/3 ; 0-988653/331724800r3 cos 28/3

# j = 9
[vnotch90 primal j=9 h=0 f=0]
1 cos 18/3
[vnotch90 primal j=9 h=0 f=1]
-1/4 cos 15/3 ; -5/28 cos 21/3
[vnotch90 primal j=9 h=0 f=2]
3/32 cos 12/3 ; 9/56 cos 18/3
[vnotch90 primal j=9 h=0 f=3]
-5/128 cos 9/3 ; -93/896 cos 15/3 ; -135/1792 cos 21/3 ; -25/1792 cos 27/3
[vnotch90 primal j=9 h=0 f=4]
35/2048 cos 6/3 ; 55/896 cos 12/3 ; 315/4096 cos 18/3 ; 5/128 cos 24/3
[vnotch90 primal j=9 h=0 f=5]
-63/8192 cos 3/3 ; -285/8192 cos 9/3 ; -6975/114688 cos 15/3 ; -835/16384 cos 21/3 ; -19/1024 cos 27/3 ; -23/14336 cos 33/3

# j = 10
[vnotch90 primal j=10 h=0 f=0]
1 sin 20/3 ; 0+1/3r3 cos 20/3
[vnotch90 primal j=10 h=0 f=1]
-1/4 sin 17/3 ; 0-1/12r3 cos 17/3 ; -17/92 sin 23/3 ; 0-17/276r3 cos 23/3
[vnotch90 primal j=10 h=0 f=2]
3/32 sin 14/3 ; 0+1/32r3 cos 14/3 ; 15/92 sin 20/3 ; 0+5/92r3 cos 20/3
[vnotch90 primal j=10 h=0 f=3]
-5/128 sin 11/3 ; 0-5/384r3 cos 11/3 ; -309/2944 sin 17/3 ; 0-103/2944r3 cos 17/3 ; -735/9568 sin 23/3 ; 0-245/9568r3 cos 23/3 ; -17/1196 sin 29/3 ; 0-17/3588r3 cos 29/3
[vnotch90 primal j=10 h=0 f=4]
35/2048 sin 8/3 ; 0+35/6144r3 cos 8/3 ; 365/5888 sin 14/3 ; 0+365/17664r3 cos 14/3 ; 23961/306176 sin 20/3 ; 0+7987/306176r3 cos 20/3 ; 3413/85376 sin 26/3 ; 0+3413/256128r3 cos 26/3

# j = 11
[vnotch90 primal j=11 h=0 f=0]
1 sin 22/3 ; 0-1/3r3 cos 22/3
[vnotch90 primal j=11 h=0 f=1]
-1/4 sin 19/3 ; 0+1/12r3 cos 19/3 ; -19/100 sin 25/3 ; 0+19/300r3 cos 25/3
[vnotch90 primal j=11 h=0 f=2]
3/32 sin 16/3 ; 0-1/32r3 cos 16/3 ; 33/200 sin 22/3 ; 0-11/200r3 cos 22/3
[vnotch90 primal j=11 h=0 f=3]
-5/128 sin 13/3 ; 0+5/384r3 cos 13/3 ; -339/3200 sin 19/3 ; 0+113/3200r3 cos 19/3 ; -1749/22400 sin 25/3 ; 0+583/22400r3 cos 25/3 ; -323/22400 sin 31/3 ; 0+323/67200r3 cos 31/3
[vnotch90 primal j=11 h=0 f=4]
35/2048 sin 10/3 ; 0-35/6144r3 cos 10/3 ; 1/16 sin 16/3 ; 0-1/48r3 cos 16/3 ; 28461/358400 sin 22/3 ; 0-9487/358400r3 cos 22/3 ; 4043/99200 sin 28/3 ; 0-4043/297600r3 cos 28/3

# j = 12
[vnotch90 primal j=12 h=0 f=0]
1 cos 24/3
[vnotch90 primal j=12 h=0 f=1]
-1/4 cos 21/3 ; -7/36 cos 27/3
[vnotch90 primal j=12 h=0 f=2]
3/32 cos 18/3 ; 1/6 cos 24/3
[vnotch90 primal j=12 h=0 f=3]
-5/128 cos 15/3 ; -41/384 cos 21/3 ; -19/240 cos 27/3 ; -7/480 cos 33/3

# j = 13
[vnotch90 primal j=13 h=0 f=0]
1 sin 26/3 ; 0+1/3r3 cos 26/3
[vnotch90 primal j=13 h=0 f=1]
-1/4 sin 23/3 ; 0-1/12r3 cos 23/3 ; -23/116 sin 29/3 ; 0-23/348r3 cos 29/3
[vnotch90 primal j=13 h=0 f=2]
3/32 sin 20/3 ; 0+1/32r3 cos 20/3 ; 39/232 sin 26/3 ; 0+13/232r3 cos 26/3

# j = 14
[vnotch90 primal j=14 h=0 f=0]
1 sin 28/3 ; 0-1/3r3 cos 28/3
[vnotch90 primal j=14 h=0 f=1]
-1/4 sin 25/3 ; 0+1/12r3 cos 25/3 ; -25/124 sin 31/3 ; 0+25/372r3 cos 31/3
[vnotch90 primal j=14 h=0 f=2]
3/32 sin 22/3 ; 0-1/32r3 cos 22/3 ; 21/124 sin 28/3 ; 0-7/124r3 cos 28/3

# j = 15
[vnotch90 primal j=15 h=0 f=0]
1 cos 30/3
[vnotch90 primal j=15 h=0 f=1]
-1/4 cos 27/3 ; -9/44 cos 33/3

# j = 16
[vnotch90 primal j=16 h=0 f=0]
1 sin 32/3 ; 0+1/3r3 cos 32/3

# j = 17
[vnotch90 primal j=17 h=0 f=0]
1 sin 34/3 ; 0-1/3r3 cos 34/3
)CORPUS";

const char k_vnotch90_dual[] = R"CORPUS(
# vnotch90 dual reference tables (25 entries)

# j = 1
[vnotch90 dual j=1 h=0 f=0]
1 sin 2/3 ; 0+1/3r3 cos 2/3
[vnotch90 dual j=1 h=0 f=1]
-5/4 sin 1/3 ; 0+5/12r3 cos 1/3 ; -1/4 sin 5/3 ; 0-1/12r3 cos 5/3
[vnotch90 dual j=1 h=0 f=2]
-3/8 sin 2/3 ; 0-1/8r3 cos 2/3 ; 3/32 sin 8/3 ; 0+1/32r3 cos 8/3
[vnotch90 dual j=1 h=0 f=3]
-15/128 sin 1/3 ; 0+5/128r3 cos 1/3 ; 21/128 sin 5/3 ; 0+7/128r3 cos 5/3 ; -25/128 sin 7/3 ; 0+25/384r3 cos 7/3 ; -5/128 sin 11/3 ; 0-5/384r3 cos 11/3
[vnotch90 dual j=1 h=0 f=4]
-195/2048 sin 2/3 ; 0-65/2048r3 cos 2/3 ; 85/896 sin 4/3 ; 0-85/2688r3 cos 4/3 ; -5/64 sin 8/3 ; 0-5/192r3 cos 8/3 ; 35/2048 sin 14/3 ; 0+35/6144r3 cos 14/3
[vnotch90 dual j=1 h=2 f=0]
-3/4 sin 2/3 ; 0-1/4r3 cos 2/3
[vnotch90 dual j=1 h=2 f=1]
-3/32 sin 1/3 ; 0+1/32r3 cos 1/3 ; 9/16 sin 5/3 ; 0+3/16r3 cos 5/3 ; -93/224 sin 7/3 ; 0+31/224r3 cos 7/3
[vnotch90 dual j=1 h=2 f=2]
-45/256 sin 2/3 ; 0-15/256r3 cos 2/3 ; 45/448 sin 4/3 ; 0-15/448r3 cos 4/3 ; -45/128 sin 8/3 ; 0-15/128r3 cos 8/3
[vnotch90 dual j=1 h=2 f=3]
-9/112 sin 1/3 ; 0+3/112r3 cos 1/3 ; 45/256 sin 5/3 ; 0+15/256r3 cos 5/3 ; -501/35840 sin 7/3 ; 0+167/35840r3 cos 7/3 ; 105/512 sin 11/3 ; 0+35/512r3 cos 11/3 ; -49977/465920 sin 13/3 ; 0+16659/465920r3 cos 13/3
[vnotch90 dual j=1 h=2 f=4]
-723/8192 sin 2/3 ; 0-241/8192r3 cos 2/3 ; 5571/286720 sin 4/3 ; 0-1857/286720r3 cos 4/3 ; -1155/8192 sin 8/3 ; 0-385/8192r3 cos 8/3 ; 1023/46592 sin 10/3 ; 0-341/46592r3 cos 10/3 ; -945/8192 sin 14/3 ; 0-315/8192r3 cos 14/3
[vnotch90 dual j=1 h=4 f=0]
9/128 sin 2/3 ; 0+3/128r3 cos 2/3
[vnotch90 dual j=1 h=4 f=1]
27/512 sin 1/3 ; 0-9/512r3 cos 1/3 ; -45/512 sin 5/3 ; 0-15/512r3 cos 5/3 ; 279/8960 sin 7/3 ; 0-93/8960r3 cos 7/3 ; -27/1280 sin 13/3 ; 0+9/1280r3 cos 13/3
[vnotch90 dual j=1 h=4 f=2]
45/512 sin 2/3 ; 0+15/512r3 cos 2/3 ; -7803/143360 sin 4/3 ; 0+2601/143360r3 cos 4/3 ; 315/4096 sin 8/3 ; 0+105/4096r3 cos 8/3 ; -477/23296 sin 10/3 ; 0+159/23296r3 cos 10/3
[vnotch90 dual j=1 h=4 f=3]
9153/114688 sin 1/3 ; 0-3051/114688r3 cos 1/3 ; -1575/16384 sin 5/3 ; 0-525/16384r3 cos 5/3 ; 9153/212992 sin 7/3 ; 0-3051/212992r3 cos 7/3 ; -945/16384 sin 11/3 ; 0-315/16384r3 cos 11/3 ; 571671/29818880 sin 13/3 ; 0-190557/29818880r3 cos 13/3 ; -3744837/566558720 sin 19/3 ; 0+1248279/566558720r3 cos 19/3
[vnotch90 dual j=1 h=4 f=4]
30951/327680 sin 2/3 ; 0+10317/327680r3 cos 2/3 ; -27657/425984 sin 4/3 ; 0+9219/425984r3 cos 4/3 ; 2835/32768 sin 8/3 ; 0+945/32768r3 cos 8/3 ; -1255437/36700160 sin 10/3 ; 0+418479/36700160r3 cos 10/3 ; 10395/262144 sin 14/3 ; 0+3465/262144r3 cos 14/3 ; -11475/1011712 sin 16/3 ; 0+3825/1011712r3 cos 16/3

# j = 2
[vnotch90 dual j=2 h=0 f=0]
1 sin 4/3 ; 0-1/3r3 cos 4/3
[vnotch90 dual j=2 h=0 f=1]
-7/4 sin 1/3 ; 0+7/12r3 cos 1/3 ; -1/4 sin 7/3 ; 0+1/12r3 cos 7/3
[vnotch90 dual j=2 h=0 f=2]
3/4 sin 4/3 ; 0-1/4r3 cos 4/3 ; 3/32 sin 10/3 ; 0-1/32r3 cos 10/3
[vnotch90 dual j=2 h=0 f=3]
-3/32 sin 1/3 ; 0+1/32r3 cos 1/3 ; 7/16 sin 5/3 ; 0+7/48r3 cos 5/3 ; -51/128 sin 7/3 ; 0+17/128r3 cos 7/3 ; -5/128 sin 13/3 ; 0+5/384r3 cos 13/3
[vnotch90 dual j=2 h=0 f=4]
-91/640 sin 2/3 ; 0-91/1920r3 cos 2/3 ; 87/1024 sin 4/3 ; 0-29/1024r3 cos 4/3 ; 55/256 sin 10/3 ; 0-55/768r3 cos 10/3 ; 35/2048 sin 16/3 ; 0-35/6144r3 cos 16/3

# j = 4
[vnotch90 dual j=4 h=0 f=0]
1 sin 8/3 ; 0+1/3r3 cos 8/3
[vnotch90 dual j=4 h=0 f=1]
-11/20 sin 5/3 ; 0-11/60r3 cos 5/3 ; -1/4 sin 11/3 ; 0-1/12r3 cos 11/3
[vnotch90 dual j=4 h=0 f=2]
3/10 sin 8/3 ; 0+1/10r3 cos 8/3 ; 3/32 sin 14/3 ; 0+1/32r3 cos 14/3
[vnotch90 dual j=4 h=0 f=3]
-11/160 sin 1/3 ; 0+11/480r3 cos 1/3 ; -21/80 sin 5/3 ; 0-7/80r3 cos 5/3 ; -111/640 sin 11/3 ; 0-37/640r3 cos 11/3 ; -5/128 sin 17/3 ; 0-5/384r3 cos 17/3
[vnotch90 dual j=4 h=0 f=4]
-53/640 sin 2/3 ; 0-53/1920r3 cos 2/3 ; 1281/5120 sin 8/3 ; 0+427/5120r3 cos 8/3 ; 25/256 sin 14/3 ; 0+25/768r3 cos 14/3 ; 35/2048 sin 20/3 ; 0+35/6144r3 cos 20/3
)CORPUS";

const std::pair<std::string_view, std::string_view> kDocuments[] = {
    {"crack_primal", k_crack_primal},
    {"crack_dual", k_crack_dual},
    {"vnotch90_primal", k_vnotch90_primal},
    {"vnotch90_dual", k_vnotch90_dual},
};

}  // namespace

std::span<const std::pair<std::string_view, std::string_view>> embedded_corpus_documents() {
    return kDocuments;
}

const std::vector<GoldenEntry>& embedded_corpus() {
    static const std::vector<GoldenEntry> corpus = [] {
        std::vector<GoldenEntry> all;
        for (const auto& [label, text] : kDocuments) {
            auto entries = parse_corpus(text, label);
            all.insert(all.end(), entries.begin(), entries.end());
        }
        return all;
    }();
    return corpus;
}

}  // namespace edgeshadow
