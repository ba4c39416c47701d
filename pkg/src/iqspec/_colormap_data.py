"""256-entry RGB lookup tables (floats in [0, 1]).

Generated by tools/gen_colormaps.py; do not edit by hand.
"""

TABLES = {
    'viridis': (
        (0.26700400, 0.00487400, 0.32941500),
        (0.26851000, 0.00960500, 0.33542700),
        (0.26994400, 0.01462500, 0.34137900),
        (0.27130500, 0.01994200, 0.34726900),
        (0.27259400, 0.02556300, 0.35309300),
        (0.27380900, 0.03149700, 0.35885300),
        (0.27495200, 0.03775200, 0.36454300),
        (0.27602200, 0.04416700, 0.37016400),
        (0.27701800, 0.05034400, 0.37571500),
        (0.27794100, 0.05632400, 0.38119100),
        (0.27879100, 0.06214500, 0.38659200),
        (0.27956600, 0.06783600, 0.39191700),
        (0.28026700, 0.07341700, 0.39716300),
        (0.28089400, 0.07890700, 0.40232900),
        (0.28144600, 0.08432000, 0.40741400),
        (0.28192400, 0.08966600, 0.41241500),
        (0.28232700, 0.09495500, 0.41733100),
        (0.28265600, 0.10019600, 0.42216000),
        (0.28291000, 0.10539300, 0.42690200),
        (0.28309100, 0.11055300, 0.43155400),
        (0.28319700, 0.11568000, 0.43611500),
        (0.28322900, 0.12077700, 0.44058400),
        (0.28318700, 0.12584800, 0.44496000),
        (0.28307200, 0.13089500, 0.44924100),
        (0.28288400, 0.13592000, 0.45342700),
        (0.28262300, 0.14092600, 0.45751700),
        (0.28229000, 0.14591200, 0.46151000),
        (0.28188700, 0.15088100, 0.46540500),
        (0.28141200, 0.15583400, 0.46920100),
        (0.28086800, 0.16077100, 0.47289900),
        (0.28025500, 0.16569300, 0.47649800),
        (0.27957400, 0.17059900, 0.47999700),
        (0.27882600, 0.17549000, 0.48339700),
        (0.27801200, 0.18036700, 0.48669700),
        (0.27713400, 0.18522800, 0.48989800),
        (0.27619400, 0.19007400, 0.49300100),
        (0.27519100, 0.19490500, 0.49600500),
        (0.27412800, 0.19972100, 0.49891100),
        (0.27300600, 0.20452000, 0.50172100),
        (0.27182800, 0.20930300, 0.50443400),
        (0.27059500, 0.21406900, 0.50705200),
        (0.26930800, 0.21881800, 0.50957700),
        (0.26796800, 0.22354900, 0.51200800),
        (0.26658000, 0.22826200, 0.51434900),
        (0.26514500, 0.23295600, 0.51659900),
        (0.26366300, 0.23763100, 0.51876200),
        (0.26213800, 0.24228600, 0.52083700),
        (0.26057100, 0.24692200, 0.52282800),
        (0.25896500, 0.25153700, 0.52473600),
        (0.25732200, 0.25613000, 0.52656300),
        (0.25564500, 0.26070300, 0.52831200),
        (0.25393500, 0.26525400, 0.52998300),
        (0.25219400, 0.26978300, 0.53157900),
        (0.25042500, 0.27429000, 0.53310300),
        (0.24862900, 0.27877500, 0.53455600),
        (0.24681100, 0.28323700, 0.53594100),
        (0.24497200, 0.28767500, 0.53726000),
        (0.24311300, 0.29209200, 0.53851600),
        (0.24123700, 0.29648500, 0.53970900),
        (0.23934600, 0.30085500, 0.54084400),
        (0.23744100, 0.30520200, 0.54192100),
        (0.23552600, 0.30952700, 0.54294400),
        (0.23360300, 0.31382800, 0.54391400),
        (0.23167400, 0.31810600, 0.54483400),
        (0.22973900, 0.32236100, 0.54570600),
        (0.22780200, 0.32659400, 0.54653200),
        (0.22586300, 0.33080500, 0.54731400),
        (0.22392500, 0.33499400, 0.54805300),
        (0.22198900, 0.33916100, 0.54875200),
        (0.22005700, 0.34330700, 0.54941300),
        (0.21813000, 0.34743200, 0.55003800),
        (0.21621000, 0.35153500, 0.55062700),
        (0.21429800, 0.35561900, 0.55118400),
        (0.21239500, 0.35968300, 0.55171000),
        (0.21050300, 0.36372700, 0.55220600),
        (0.20862300, 0.36775200, 0.55267500),
        (0.20675600, 0.37175800, 0.55311700),
        (0.20490300, 0.37574600, 0.55353300),
        (0.20306300, 0.37971600, 0.55392500),
        (0.20123900, 0.38367000, 0.55429400),
        (0.19943000, 0.38760700, 0.55464200),
        (0.19763600, 0.39152800, 0.55496900),
        (0.19586000, 0.39543300, 0.55527600),
        (0.19410000, 0.39932300, 0.55556500),
        (0.19235700, 0.40319900, 0.55583600),
        (0.19063100, 0.40706100, 0.55608900),
        (0.18892300, 0.41091000, 0.55632600),
        (0.18723100, 0.41474600, 0.55654700),
        (0.18555600, 0.41857000, 0.55675300),
        (0.18389800, 0.42238300, 0.55694400),
        (0.18225600, 0.42618400, 0.55712000),
        (0.18062900, 0.42997500, 0.55728200),
        (0.17901900, 0.43375600, 0.55743000),
        (0.17742300, 0.43752700, 0.55756500),
        (0.17584100, 0.44129000, 0.55768500),
        (0.17427400, 0.44504400, 0.55779200),
        (0.17271900, 0.44879100, 0.55788500),
        (0.17117600, 0.45253000, 0.55796500),
        (0.16964600, 0.45626200, 0.55803000),
        (0.16812600, 0.45998800, 0.55808200),
        (0.16661700, 0.46370800, 0.55811900),
        (0.16511700, 0.46742300, 0.55814100),
        (0.16362500, 0.47113300, 0.55814800),
        (0.16214200, 0.47483800, 0.55814000),
        (0.16066500, 0.47854000, 0.55811500),
        (0.15919400, 0.48223700, 0.55807300),
        (0.15772900, 0.48593200, 0.55801300),
        (0.15627000, 0.48962400, 0.55793600),
        (0.15481500, 0.49331300, 0.55784000),
        (0.15336400, 0.49700000, 0.55772400),
        (0.15191800, 0.50068500, 0.55758700),
        (0.15047600, 0.50436900, 0.55743000),
        (0.14903900, 0.50805100, 0.55725000),
        (0.14760700, 0.51173300, 0.55704900),
        (0.14618000, 0.51541300, 0.55682300),
        (0.14475900, 0.51909300, 0.55657200),
        (0.14334300, 0.52277300, 0.55629500),
        (0.14193500, 0.52645300, 0.55599100),
        (0.14053600, 0.53013200, 0.55565900),
        (0.13914700, 0.53381200, 0.55529800),
        (0.13777000, 0.53749200, 0.55490600),
        (0.13640800, 0.54117300, 0.55448300),
        (0.13506600, 0.54485300, 0.55402900),
        (0.13374300, 0.54853500, 0.55354100),
        (0.13244400, 0.55221600, 0.55301800),
        (0.13117200, 0.55589900, 0.55245900),
        (0.12993300, 0.55958200, 0.55186400),
        (0.12872900, 0.56326500, 0.55122900),
        (0.12756800, 0.56694900, 0.55055600),
        (0.12645300, 0.57063300, 0.54984100),
        (0.12539400, 0.57431800, 0.54908600),
        (0.12439500, 0.57800200, 0.54828700),
        (0.12346300, 0.58168700, 0.54744500),
        (0.12260600, 0.58537100, 0.54655700),
        (0.12183100, 0.58905500, 0.54562300),
        (0.12114800, 0.59273900, 0.54464100),
        (0.12056500, 0.59642200, 0.54361100),
        (0.12009200, 0.60010400, 0.54253000),
        (0.11973800, 0.60378500, 0.54140000),
        (0.11951200, 0.60746400, 0.54021800),
        (0.11942300, 0.61114100, 0.53898200),
        (0.11948300, 0.61481700, 0.53769200),
        (0.11969900, 0.61849000, 0.53634700),
        (0.12008100, 0.62216100, 0.53494600),
        (0.12063800, 0.62582800, 0.53348800),
        (0.12138000, 0.62949200, 0.53197300),
        (0.12231200, 0.63315300, 0.53039800),
        (0.12344400, 0.63680900, 0.52876300),
        (0.12478000, 0.64046100, 0.52706800),
        (0.12632600, 0.64410700, 0.52531100),
        (0.12808700, 0.64774900, 0.52349100),
        (0.13006700, 0.65138400, 0.52160800),
        (0.13226800, 0.65501400, 0.51966100),
        (0.13469200, 0.65863600, 0.51764900),
        (0.13733900, 0.66225200, 0.51557100),
        (0.14021000, 0.66585900, 0.51342700),
        (0.14330300, 0.66945900, 0.51121500),
        (0.14661600, 0.67305000, 0.50893600),
        (0.15014800, 0.67663100, 0.50658900),
        (0.15389400, 0.68020300, 0.50417200),
        (0.15785100, 0.68376500, 0.50168600),
        (0.16201600, 0.68731600, 0.49912900),
        (0.16638300, 0.69085600, 0.49650200),
        (0.17094800, 0.69438400, 0.49380300),
        (0.17570700, 0.69790000, 0.49103300),
        (0.18065300, 0.70140200, 0.48818900),
        (0.18578300, 0.70489100, 0.48527300),
        (0.19109000, 0.70836600, 0.48228400),
        (0.19657100, 0.71182700, 0.47922100),
        (0.20221900, 0.71527200, 0.47608400),
        (0.20803000, 0.71870100, 0.47287300),
        (0.21400000, 0.72211400, 0.46958800),
        (0.22012400, 0.72550900, 0.46622600),
        (0.22639700, 0.72888800, 0.46278900),
        (0.23281500, 0.73224700, 0.45927700),
        (0.23937400, 0.73558800, 0.45568800),
        (0.24607000, 0.73891000, 0.45202400),
        (0.25289900, 0.74221100, 0.44828400),
        (0.25985700, 0.74549200, 0.44446700),
        (0.26694100, 0.74875100, 0.44057300),
        (0.27414900, 0.75198800, 0.43660100),
        (0.28147700, 0.75520300, 0.43255200),
        (0.28892100, 0.75839400, 0.42842600),
        (0.29647900, 0.76156100, 0.42422300),
        (0.30414800, 0.76470400, 0.41994300),
        (0.31192500, 0.76782200, 0.41558600),
        (0.31980900, 0.77091400, 0.41115200),
        (0.32779600, 0.77398000, 0.40664000),
        (0.33588500, 0.77701800, 0.40204900),
        (0.34407400, 0.78002900, 0.39738100),
        (0.35236000, 0.78301100, 0.39263600),
        (0.36074100, 0.78596400, 0.38781400),
        (0.36921400, 0.78888800, 0.38291400),
        (0.37777900, 0.79178100, 0.37793900),
        (0.38643300, 0.79464400, 0.37288600),
        (0.39517400, 0.79747500, 0.36775700),
        (0.40400100, 0.80027500, 0.36255200),
        (0.41291300, 0.80304100, 0.35726900),
        (0.42190800, 0.80577400, 0.35191000),
        (0.43098300, 0.80847300, 0.34647600),
        (0.44013700, 0.81113800, 0.34096700),
        (0.44936800, 0.81376800, 0.33538400),
        (0.45867400, 0.81636300, 0.32972700),
        (0.46805300, 0.81892100, 0.32399800),
        (0.47750400, 0.82144400, 0.31819500),
        (0.48702600, 0.82392900, 0.31232100),
        (0.49661500, 0.82637600, 0.30637700),
        (0.50627100, 0.82878600, 0.30036200),
        (0.51599200, 0.83115800, 0.29427900),
        (0.52577600, 0.83349100, 0.28812700),
        (0.53562100, 0.83578500, 0.28190800),
        (0.54552400, 0.83803900, 0.27562600),
        (0.55548400, 0.84025400, 0.26928100),
        (0.56549800, 0.84243000, 0.26287700),
        (0.57556300, 0.84456600, 0.25641500),
        (0.58567800, 0.84666100, 0.24989700),
        (0.59583900, 0.84871700, 0.24332900),
        (0.60604500, 0.85073300, 0.23671200),
        (0.61629300, 0.85270900, 0.23005200),
        (0.62657900, 0.85464500, 0.22335300),
        (0.63690200, 0.85654200, 0.21662000),
        (0.64725700, 0.85840000, 0.20986100),
        (0.65764200, 0.86021900, 0.20308200),
        (0.66805400, 0.86199900, 0.19629300),
        (0.67848900, 0.86374200, 0.18950300),
        (0.68894400, 0.86544800, 0.18272500),
        (0.69941500, 0.86711700, 0.17597100),
        (0.70989800, 0.86875100, 0.16925700),
        (0.72039100, 0.87035000, 0.16260300),
        (0.73088900, 0.87191600, 0.15602900),
        (0.74138800, 0.87344900, 0.14956100),
        (0.75188400, 0.87495100, 0.14322800),
        (0.76237300, 0.87642400, 0.13706400),
        (0.77285200, 0.87786800, 0.13110900),
        (0.78331500, 0.87928500, 0.12540500),
        (0.79376000, 0.88067800, 0.12000500),
        (0.80418200, 0.88204600, 0.11496500),
        (0.81457600, 0.88339300, 0.11034700),
        (0.82494000, 0.88472000, 0.10621700),
        (0.83527000, 0.88602900, 0.10264600),
        (0.84556100, 0.88732200, 0.09970200),
        (0.85581000, 0.88860100, 0.09745200),
        (0.86601300, 0.88986800, 0.09595300),
        (0.87616800, 0.89112500, 0.09525000),
        (0.88627100, 0.89237400, 0.09537400),
        (0.89632000, 0.89361600, 0.09633500),
        (0.90631100, 0.89485500, 0.09812500),
        (0.91624200, 0.89609100, 0.10071700),
        (0.92610600, 0.89733000, 0.10407100),
        (0.93590400, 0.89857000, 0.10813100),
        (0.94563600, 0.89981500, 0.11283800),
        (0.95530000, 0.90106500, 0.11812800),
        (0.96489400, 0.90232300, 0.12394100),
        (0.97441700, 0.90359000, 0.13021500),
        (0.98386800, 0.90486700, 0.13689700),
        (0.99324800, 0.90615700, 0.14393600),
    ),
    'plasma': (
        (0.05038300, 0.02980300, 0.52797500),
        (0.06353600, 0.02842600, 0.53312400),
        (0.07535300, 0.02720600, 0.53800700),
        (0.08622200, 0.02612500, 0.54265800),
        (0.09637900, 0.02516500, 0.54710300),
        (0.10598000, 0.02430900, 0.55136800),
        (0.11512400, 0.02355600, 0.55546800),
        (0.12390300, 0.02287800, 0.55942300),
        (0.13238100, 0.02225800, 0.56325000),
        (0.14060300, 0.02168700, 0.56695900),
        (0.14860700, 0.02115400, 0.57056200),
        (0.15642100, 0.02065100, 0.57406500),
        (0.16407000, 0.02017100, 0.57747800),
        (0.17157400, 0.01970600, 0.58080600),
        (0.17895000, 0.01925200, 0.58405400),
        (0.18621300, 0.01880300, 0.58722800),
        (0.19337400, 0.01835400, 0.59033000),
        (0.20044500, 0.01790200, 0.59336400),
        (0.20743500, 0.01744200, 0.59633300),
        (0.21435000, 0.01697300, 0.59923900),
        (0.22119700, 0.01649700, 0.60208300),
        (0.22798300, 0.01600700, 0.60486700),
        (0.23471500, 0.01550200, 0.60759200),
        (0.24139600, 0.01497900, 0.61025900),
        (0.24803200, 0.01443900, 0.61286800),
        (0.25462700, 0.01388200, 0.61541900),
        (0.26118300, 0.01330800, 0.61791100),
        (0.26770300, 0.01271600, 0.62034600),
        (0.27419100, 0.01210900, 0.62272200),
        (0.28064800, 0.01148800, 0.62503800),
        (0.28707600, 0.01085500, 0.62729500),
        (0.29347800, 0.01021300, 0.62949000),
        (0.29985500, 0.00956100, 0.63162400),
        (0.30621000, 0.00890200, 0.63369400),
        (0.31254300, 0.00823900, 0.63570000),
        (0.31885600, 0.00757600, 0.63764000),
        (0.32515000, 0.00691500, 0.63951200),
        (0.33142600, 0.00626100, 0.64131600),
        (0.33768300, 0.00561800, 0.64304900),
        (0.34392500, 0.00499100, 0.64471000),
        (0.35015000, 0.00438200, 0.64629800),
        (0.35635900, 0.00379800, 0.64781000),
        (0.36255300, 0.00324300, 0.64924500),
        (0.36873300, 0.00272400, 0.65060100),
        (0.37489700, 0.00224500, 0.65187600),
        (0.38104700, 0.00181400, 0.65306800),
        (0.38718300, 0.00143400, 0.65417700),
        (0.39330400, 0.00111400, 0.65519900),
        (0.39941100, 0.00085900, 0.65613300),
        (0.40550300, 0.00067800, 0.65697700),
        (0.41158000, 0.00057700, 0.65773000),
        (0.41764200, 0.00056400, 0.65839000),
        (0.42368900, 0.00064600, 0.65895600),
        (0.42971900, 0.00083100, 0.65942500),
        (0.43573400, 0.00112700, 0.65979700),
        (0.44173200, 0.00154000, 0.66006900),
        (0.44771400, 0.00208000, 0.66024000),
        (0.45367700, 0.00275500, 0.66031000),
        (0.45962300, 0.00357400, 0.66027700),
        (0.46555000, 0.00454500, 0.66013900),
        (0.47145700, 0.00567800, 0.65989700),
        (0.47734400, 0.00698000, 0.65954900),
        (0.48321000, 0.00846000, 0.65909500),
        (0.48905500, 0.01012700, 0.65853400),
        (0.49487700, 0.01199000, 0.65786500),
        (0.50067800, 0.01405500, 0.65708800),
        (0.50645400, 0.01633300, 0.65620200),
        (0.51220600, 0.01883300, 0.65520900),
        (0.51793300, 0.02156300, 0.65410900),
        (0.52363300, 0.02453200, 0.65290100),
        (0.52930600, 0.02774700, 0.65158600),
        (0.53495200, 0.03121700, 0.65016500),
        (0.54057000, 0.03495000, 0.64864000),
        (0.54615700, 0.03895400, 0.64701000),
        (0.55171500, 0.04313600, 0.64527700),
        (0.55724300, 0.04733100, 0.64344300),
        (0.56273800, 0.05154500, 0.64150900),
        (0.56820100, 0.05577800, 0.63947700),
        (0.57363200, 0.06002800, 0.63734900),
        (0.57902900, 0.06429600, 0.63512600),
        (0.58439100, 0.06857900, 0.63281200),
        (0.58971900, 0.07287800, 0.63040800),
        (0.59501100, 0.07719000, 0.62791700),
        (0.60026600, 0.08151600, 0.62534200),
        (0.60548500, 0.08585400, 0.62268600),
        (0.61066700, 0.09020400, 0.61995100),
        (0.61581200, 0.09456400, 0.61714000),
        (0.62091900, 0.09893400, 0.61425700),
        (0.62598700, 0.10331200, 0.61130500),
        (0.63101700, 0.10769900, 0.60828700),
        (0.63600800, 0.11209200, 0.60520500),
        (0.64095900, 0.11649200, 0.60206500),
        (0.64587200, 0.12089800, 0.59886700),
        (0.65074600, 0.12530900, 0.59561700),
        (0.65558000, 0.12972500, 0.59231700),
        (0.66037400, 0.13414400, 0.58897100),
        (0.66512900, 0.13856600, 0.58558200),
        (0.66984500, 0.14299200, 0.58215400),
        (0.67452200, 0.14741900, 0.57868800),
        (0.67916000, 0.15184800, 0.57518900),
        (0.68375800, 0.15627800, 0.57166000),
        (0.68831800, 0.16070900, 0.56810300),
        (0.69284000, 0.16514100, 0.56452200),
        (0.69732400, 0.16957300, 0.56091900),
        (0.70176900, 0.17400500, 0.55729600),
        (0.70617800, 0.17843700, 0.55365700),
        (0.71054900, 0.18286800, 0.55000400),
        (0.71488300, 0.18729900, 0.54633800),
        (0.71918100, 0.19172900, 0.54266300),
        (0.72344400, 0.19615800, 0.53898100),
        (0.72767000, 0.20058600, 0.53529300),
        (0.73186200, 0.20501300, 0.53160100),
        (0.73601900, 0.20943900, 0.52790800),
        (0.74014300, 0.21386400, 0.52421600),
        (0.74423200, 0.21828800, 0.52052400),
        (0.74828900, 0.22271100, 0.51683400),
        (0.75231200, 0.22713300, 0.51314900),
        (0.75630400, 0.23155500, 0.50946800),
        (0.76026400, 0.23597600, 0.50579400),
        (0.76419300, 0.24039600, 0.50212600),
        (0.76809000, 0.24481700, 0.49846500),
        (0.77195800, 0.24923700, 0.49481300),
        (0.77579600, 0.25365800, 0.49117100),
        (0.77960400, 0.25807800, 0.48753900),
        (0.78338300, 0.26250000, 0.48391800),
        (0.78713300, 0.26692200, 0.48030700),
        (0.79085500, 0.27134500, 0.47670600),
        (0.79454900, 0.27577000, 0.47311700),
        (0.79821600, 0.28019700, 0.46953800),
        (0.80185500, 0.28462600, 0.46597100),
        (0.80546700, 0.28905700, 0.46241500),
        (0.80905200, 0.29349100, 0.45887000),
        (0.81261200, 0.29792800, 0.45533800),
        (0.81614400, 0.30236800, 0.45181600),
        (0.81965100, 0.30681200, 0.44830600),
        (0.82313200, 0.31126100, 0.44480600),
        (0.82658800, 0.31571400, 0.44131600),
        (0.83001800, 0.32017200, 0.43783600),
        (0.83342200, 0.32463500, 0.43436600),
        (0.83680100, 0.32910500, 0.43090500),
        (0.84015500, 0.33358000, 0.42745500),
        (0.84348400, 0.33806200, 0.42401300),
        (0.84678800, 0.34255100, 0.42057900),
        (0.85006600, 0.34704800, 0.41715300),
        (0.85331900, 0.35155300, 0.41373400),
        (0.85654700, 0.35606600, 0.41032200),
        (0.85975000, 0.36058800, 0.40691700),
        (0.86292700, 0.36511900, 0.40351900),
        (0.86607800, 0.36966000, 0.40012600),
        (0.86920300, 0.37421200, 0.39673800),
        (0.87230300, 0.37877400, 0.39335500),
        (0.87537600, 0.38334700, 0.38997600),
        (0.87842300, 0.38793200, 0.38660000),
        (0.88144300, 0.39252900, 0.38322900),
        (0.88443600, 0.39713900, 0.37986000),
        (0.88740200, 0.40176200, 0.37649400),
        (0.89034000, 0.40639800, 0.37313000),
        (0.89325000, 0.41104800, 0.36976800),
        (0.89613100, 0.41571200, 0.36640700),
        (0.89898400, 0.42039200, 0.36304700),
        (0.90180700, 0.42508700, 0.35968800),
        (0.90460100, 0.42979700, 0.35632900),
        (0.90736500, 0.43452400, 0.35297000),
        (0.91009800, 0.43926800, 0.34961000),
        (0.91280000, 0.44402900, 0.34625100),
        (0.91547100, 0.44880700, 0.34289000),
        (0.91810900, 0.45360300, 0.33952900),
        (0.92071400, 0.45841700, 0.33616600),
        (0.92328700, 0.46325100, 0.33280100),
        (0.92582500, 0.46810300, 0.32943500),
        (0.92832900, 0.47297500, 0.32606700),
        (0.93079800, 0.47786700, 0.32269700),
        (0.93323200, 0.48278000, 0.31932500),
        (0.93563000, 0.48771200, 0.31595200),
        (0.93799000, 0.49266700, 0.31257500),
        (0.94031300, 0.49764200, 0.30919700),
        (0.94259800, 0.50263900, 0.30581600),
        (0.94484400, 0.50765800, 0.30243300),
        (0.94705100, 0.51269900, 0.29904900),
        (0.94921700, 0.51776300, 0.29566200),
        (0.95134400, 0.52285000, 0.29227500),
        (0.95342800, 0.52796000, 0.28888300),
        (0.95547000, 0.53309300, 0.28549000),
        (0.95746900, 0.53825000, 0.28209600),
        (0.95942400, 0.54343100, 0.27870100),
        (0.96133600, 0.54863600, 0.27530500),
        (0.96320300, 0.55386500, 0.27190900),
        (0.96502400, 0.55911800, 0.26851300),
        (0.96679800, 0.56439600, 0.26511800),
        (0.96852600, 0.56970000, 0.26172100),
        (0.97020500, 0.57502800, 0.25832500),
        (0.97183500, 0.58038200, 0.25493100),
        (0.97341600, 0.58576100, 0.25154000),
        (0.97494700, 0.59116500, 0.24815100),
        (0.97642800, 0.59659500, 0.24476700),
        (0.97785600, 0.60205100, 0.24138700),
        (0.97923300, 0.60753200, 0.23801300),
        (0.98055600, 0.61303900, 0.23464600),
        (0.98182600, 0.61857200, 0.23128700),
        (0.98304100, 0.62413100, 0.22793700),
        (0.98419900, 0.62971800, 0.22459500),
        (0.98530100, 0.63533000, 0.22126500),
        (0.98634500, 0.64096900, 0.21794800),
        (0.98733200, 0.64663300, 0.21464800),
        (0.98826000, 0.65232500, 0.21136400),
        (0.98912800, 0.65804300, 0.20810000),
        (0.98993500, 0.66378700, 0.20485900),
        (0.99068100, 0.66955800, 0.20164200),
        (0.99136500, 0.67535500, 0.19845300),
        (0.99198500, 0.68117900, 0.19529500),
        (0.99254100, 0.68703000, 0.19217000),
        (0.99303200, 0.69290700, 0.18908400),
        (0.99345600, 0.69881000, 0.18604100),
        (0.99381400, 0.70474100, 0.18304300),
        (0.99410300, 0.71069800, 0.18009700),
        (0.99432400, 0.71668100, 0.17720800),
        (0.99447400, 0.72269100, 0.17438100),
        (0.99455300, 0.72872800, 0.17162200),
        (0.99456100, 0.73479100, 0.16893800),
        (0.99449500, 0.74088000, 0.16633500),
        (0.99435500, 0.74699500, 0.16382100),
        (0.99414100, 0.75313700, 0.16140400),
        (0.99385100, 0.75930400, 0.15909200),
        (0.99348200, 0.76549900, 0.15689100),
        (0.99303300, 0.77172000, 0.15480800),
        (0.99250500, 0.77796700, 0.15285500),
        (0.99189700, 0.78423900, 0.15104200),
        (0.99120900, 0.79053700, 0.14937700),
        (0.99043900, 0.79685900, 0.14787000),
        (0.98958700, 0.80320500, 0.14652900),
        (0.98864800, 0.80957900, 0.14535700),
        (0.98762100, 0.81597800, 0.14436300),
        (0.98650900, 0.82240100, 0.14355700),
        (0.98531400, 0.82884600, 0.14294500),
        (0.98403100, 0.83531500, 0.14252800),
        (0.98265300, 0.84181200, 0.14230300),
        (0.98119000, 0.84832900, 0.14227900),
        (0.97964400, 0.85486600, 0.14245300),
        (0.97799500, 0.86143200, 0.14280800),
        (0.97626500, 0.86801600, 0.14335100),
        (0.97444300, 0.87462200, 0.14406100),
        (0.97253000, 0.88125000, 0.14492300),
        (0.97053300, 0.88789600, 0.14591900),
        (0.96844300, 0.89456400, 0.14701400),
        (0.96627100, 0.90124900, 0.14818000),
        (0.96402100, 0.90795000, 0.14937000),
        (0.96168100, 0.91467200, 0.15052000),
        (0.95927600, 0.92140700, 0.15156600),
        (0.95680800, 0.92815200, 0.15240900),
        (0.95428700, 0.93490800, 0.15292100),
        (0.95172600, 0.94167100, 0.15292500),
        (0.94915100, 0.94843500, 0.15217800),
        (0.94660200, 0.95519000, 0.15032800),
        (0.94415200, 0.96191600, 0.14686100),
        (0.94189600, 0.96859000, 0.14095600),
        (0.94001500, 0.97515800, 0.13132600),
    ),
    'inferno': (
        (0.00146200, 0.00046600, 0.01386600),
        (0.00226700, 0.00127000, 0.01857000),
        (0.00329900, 0.00224900, 0.02423900),
        (0.00454700, 0.00339200, 0.03090900),
        (0.00600600, 0.00469200, 0.03855800),
        (0.00767600, 0.00613600, 0.04683600),
        (0.00956100, 0.00771300, 0.05514300),
        (0.01166300, 0.00941700, 0.06346000),
        (0.01399500, 0.01122500, 0.07186200),
        (0.01656100, 0.01313600, 0.08028200),
        (0.01937300, 0.01513300, 0.08876700),
        (0.02244700, 0.01719900, 0.09732700),
        (0.02579300, 0.01933100, 0.10593000),
        (0.02943200, 0.02150300, 0.11462100),
        (0.03338500, 0.02370200, 0.12339700),
        (0.03766800, 0.02592100, 0.13223200),
        (0.04225300, 0.02813900, 0.14114100),
        (0.04691500, 0.03032400, 0.15016400),
        (0.05164400, 0.03247400, 0.15925400),
        (0.05644900, 0.03456900, 0.16841400),
        (0.06134000, 0.03659000, 0.17764200),
        (0.06633100, 0.03850400, 0.18696200),
        (0.07142900, 0.04029400, 0.19635400),
        (0.07663700, 0.04190500, 0.20579900),
        (0.08196200, 0.04332800, 0.21528900),
        (0.08741100, 0.04455600, 0.22481300),
        (0.09299000, 0.04558300, 0.23435800),
        (0.09870200, 0.04640200, 0.24390400),
        (0.10455100, 0.04700800, 0.25343000),
        (0.11053600, 0.04739900, 0.26291200),
        (0.11665600, 0.04757400, 0.27232100),
        (0.12290800, 0.04753600, 0.28162400),
        (0.12928500, 0.04729300, 0.29078800),
        (0.13577800, 0.04685600, 0.29977600),
        (0.14237800, 0.04624200, 0.30855300),
        (0.14907300, 0.04546800, 0.31708500),
        (0.15585000, 0.04455900, 0.32533800),
        (0.16268900, 0.04355400, 0.33327700),
        (0.16957500, 0.04248900, 0.34087400),
        (0.17649300, 0.04140200, 0.34811100),
        (0.18342900, 0.04032900, 0.35497100),
        (0.19036700, 0.03930900, 0.36144700),
        (0.19729700, 0.03840000, 0.36753500),
        (0.20420900, 0.03763200, 0.37323800),
        (0.21109500, 0.03703000, 0.37856300),
        (0.21794900, 0.03661500, 0.38352200),
        (0.22476300, 0.03640500, 0.38812900),
        (0.23153800, 0.03640500, 0.39240000),
        (0.23827300, 0.03662100, 0.39635300),
        (0.24496700, 0.03705500, 0.40000700),
        (0.25162000, 0.03770500, 0.40337800),
        (0.25823400, 0.03857100, 0.40648500),
        (0.26481000, 0.03964700, 0.40934500),
        (0.27134700, 0.04092200, 0.41197600),
        (0.27785000, 0.04235300, 0.41439200),
        (0.28432100, 0.04393300, 0.41660800),
        (0.29076300, 0.04564400, 0.41863700),
        (0.29717800, 0.04747000, 0.42049100),
        (0.30356800, 0.04939600, 0.42218200),
        (0.30993500, 0.05140700, 0.42372100),
        (0.31628200, 0.05349000, 0.42511600),
        (0.32261000, 0.05563400, 0.42637700),
        (0.32892100, 0.05782700, 0.42751100),
        (0.33521700, 0.06006000, 0.42852400),
        (0.34150000, 0.06232500, 0.42942500),
        (0.34777100, 0.06461600, 0.43021700),
        (0.35403200, 0.06692500, 0.43090600),
        (0.36028400, 0.06924700, 0.43149700),
        (0.36652900, 0.07157900, 0.43199400),
        (0.37276800, 0.07391500, 0.43240000),
        (0.37900100, 0.07625300, 0.43271900),
        (0.38522800, 0.07859100, 0.43295500),
        (0.39145300, 0.08092700, 0.43310900),
        (0.39767400, 0.08325700, 0.43318300),
        (0.40389400, 0.08558000, 0.43317900),
        (0.41011300, 0.08789600, 0.43309800),
        (0.41633100, 0.09020300, 0.43294300),
        (0.42254900, 0.09250100, 0.43271400),
        (0.42876800, 0.09479000, 0.43241200),
        (0.43498700, 0.09706900, 0.43203900),
        (0.44120700, 0.09933800, 0.43159400),
        (0.44742800, 0.10159700, 0.43108000),
        (0.45365100, 0.10384800, 0.43049800),
        (0.45987500, 0.10608900, 0.42984600),
        (0.46610000, 0.10832200, 0.42912500),
        (0.47232800, 0.11054700, 0.42833400),
        (0.47855800, 0.11276400, 0.42747500),
        (0.48478900, 0.11497400, 0.42654800),
        (0.49102200, 0.11717900, 0.42555200),
        (0.49725700, 0.11937900, 0.42448800),
        (0.50349300, 0.12157500, 0.42335600),
        (0.50973000, 0.12376900, 0.42215600),
        (0.51596700, 0.12596000, 0.42088700),
        (0.52220600, 0.12815000, 0.41954900),
        (0.52844400, 0.13034100, 0.41814200),
        (0.53468300, 0.13253400, 0.41666700),
        (0.54092000, 0.13472900, 0.41512300),
        (0.54715700, 0.13692900, 0.41351100),
        (0.55339200, 0.13913400, 0.41182900),
        (0.55962400, 0.14134600, 0.41007800),
        (0.56585400, 0.14356700, 0.40825800),
        (0.57208100, 0.14579700, 0.40636900),
        (0.57830400, 0.14803900, 0.40441100),
        (0.58452100, 0.15029400, 0.40238500),
        (0.59073400, 0.15256300, 0.40029000),
        (0.59694000, 0.15484800, 0.39812500),
        (0.60313900, 0.15715100, 0.39589100),
        (0.60933000, 0.15947400, 0.39358900),
        (0.61551300, 0.16181700, 0.39121900),
        (0.62168500, 0.16418400, 0.38878100),
        (0.62784700, 0.16657500, 0.38627600),
        (0.63399800, 0.16899200, 0.38370400),
        (0.64013500, 0.17143800, 0.38106500),
        (0.64626000, 0.17391400, 0.37835900),
        (0.65236900, 0.17642100, 0.37558600),
        (0.65846300, 0.17896200, 0.37274800),
        (0.66454000, 0.18153900, 0.36984600),
        (0.67059900, 0.18415300, 0.36687900),
        (0.67663800, 0.18680700, 0.36384900),
        (0.68265600, 0.18950100, 0.36075700),
        (0.68865300, 0.19223900, 0.35760300),
        (0.69462700, 0.19502100, 0.35438800),
        (0.70057600, 0.19785100, 0.35111300),
        (0.70650000, 0.20072800, 0.34777700),
        (0.71239600, 0.20365600, 0.34438300),
        (0.71826400, 0.20663600, 0.34093100),
        (0.72410300, 0.20967000, 0.33742400),
        (0.72990900, 0.21275900, 0.33386100),
        (0.73568300, 0.21590600, 0.33024500),
        (0.74142300, 0.21911200, 0.32657600),
        (0.74712700, 0.22237800, 0.32285600),
        (0.75279400, 0.22570600, 0.31908500),
        (0.75842200, 0.22909700, 0.31526600),
        (0.76401000, 0.23255400, 0.31139900),
        (0.76955600, 0.23607700, 0.30748500),
        (0.77505900, 0.23966700, 0.30352600),
        (0.78051700, 0.24332700, 0.29952300),
        (0.78592900, 0.24705600, 0.29547700),
        (0.79129300, 0.25085600, 0.29139000),
        (0.79660700, 0.25472800, 0.28726400),
        (0.80187100, 0.25867400, 0.28309900),
        (0.80708200, 0.26269200, 0.27889800),
        (0.81223900, 0.26678600, 0.27466100),
        (0.81734100, 0.27095400, 0.27039000),
        (0.82238600, 0.27519700, 0.26608500),
        (0.82737200, 0.27951700, 0.26175000),
        (0.83229900, 0.28391300, 0.25738300),
        (0.83716500, 0.28838500, 0.25298800),
        (0.84196900, 0.29293300, 0.24856400),
        (0.84670900, 0.29755900, 0.24411300),
        (0.85138400, 0.30226000, 0.23963600),
        (0.85599200, 0.30703800, 0.23513300),
        (0.86053300, 0.31189200, 0.23060600),
        (0.86500600, 0.31682200, 0.22605500),
        (0.86940900, 0.32182700, 0.22148200),
        (0.87374100, 0.32690600, 0.21688600),
        (0.87800100, 0.33206000, 0.21226800),
        (0.88218800, 0.33728700, 0.20762800),
        (0.88630200, 0.34258600, 0.20296800),
        (0.89034100, 0.34795700, 0.19828600),
        (0.89430500, 0.35339900, 0.19358400),
        (0.89819200, 0.35891100, 0.18886000),
        (0.90200300, 0.36449200, 0.18411600),
        (0.90573500, 0.37014000, 0.17935000),
        (0.90939000, 0.37585600, 0.17456300),
        (0.91296600, 0.38163600, 0.16975500),
        (0.91646200, 0.38748100, 0.16492400),
        (0.91987900, 0.39338900, 0.16007000),
        (0.92321500, 0.39935900, 0.15519300),
        (0.92647000, 0.40538900, 0.15029200),
        (0.92964400, 0.41147900, 0.14536700),
        (0.93273700, 0.41762700, 0.14041700),
        (0.93574700, 0.42383100, 0.13544000),
        (0.93867500, 0.43009100, 0.13043800),
        (0.94152100, 0.43640500, 0.12540900),
        (0.94428500, 0.44277200, 0.12035400),
        (0.94696500, 0.44919100, 0.11527200),
        (0.94956200, 0.45566000, 0.11016400),
        (0.95207500, 0.46217800, 0.10503100),
        (0.95450600, 0.46874400, 0.09987400),
        (0.95685200, 0.47535600, 0.09469500),
        (0.95911400, 0.48201400, 0.08949900),
        (0.96129300, 0.48871600, 0.08428900),
        (0.96338700, 0.49546200, 0.07907300),
        (0.96539700, 0.50224900, 0.07385900),
        (0.96732200, 0.50907800, 0.06865900),
        (0.96916300, 0.51594600, 0.06348800),
        (0.97091900, 0.52285300, 0.05836700),
        (0.97259000, 0.52979800, 0.05332400),
        (0.97417600, 0.53678000, 0.04839200),
        (0.97567700, 0.54379800, 0.04361800),
        (0.97709200, 0.55085000, 0.03905000),
        (0.97842200, 0.55793700, 0.03493100),
        (0.97966600, 0.56505700, 0.03140900),
        (0.98082400, 0.57220900, 0.02850800),
        (0.98189500, 0.57939200, 0.02625000),
        (0.98288100, 0.58660600, 0.02466100),
        (0.98377900, 0.59384900, 0.02377000),
        (0.98459100, 0.60112200, 0.02360600),
        (0.98531500, 0.60842200, 0.02420200),
        (0.98595200, 0.61575000, 0.02559200),
        (0.98650200, 0.62310500, 0.02781400),
        (0.98696400, 0.63048500, 0.03090800),
        (0.98733700, 0.63789000, 0.03491600),
        (0.98762200, 0.64532000, 0.03988600),
        (0.98781900, 0.65277300, 0.04558100),
        (0.98792600, 0.66025000, 0.05175000),
        (0.98794500, 0.66774800, 0.05832900),
        (0.98787400, 0.67526700, 0.06525700),
        (0.98771400, 0.68280700, 0.07248900),
        (0.98746400, 0.69036600, 0.07999000),
        (0.98712400, 0.69794400, 0.08773100),
        (0.98669400, 0.70554000, 0.09569400),
        (0.98617500, 0.71315300, 0.10386300),
        (0.98556600, 0.72078200, 0.11222900),
        (0.98486500, 0.72842700, 0.12078500),
        (0.98407500, 0.73608700, 0.12952700),
        (0.98319600, 0.74375800, 0.13845300),
        (0.98222800, 0.75144200, 0.14756500),
        (0.98117300, 0.75913500, 0.15686300),
        (0.98003200, 0.76683700, 0.16635300),
        (0.97880600, 0.77454500, 0.17603700),
        (0.97749700, 0.78225800, 0.18592300),
        (0.97610800, 0.78997400, 0.19601800),
        (0.97463800, 0.79769200, 0.20633200),
        (0.97308800, 0.80540900, 0.21687700),
        (0.97146800, 0.81312200, 0.22765800),
        (0.96978300, 0.82082500, 0.23868600),
        (0.96804100, 0.82851500, 0.24997200),
        (0.96624300, 0.83619100, 0.26153400),
        (0.96439400, 0.84384800, 0.27339100),
        (0.96251700, 0.85147600, 0.28554600),
        (0.96062600, 0.85906900, 0.29801000),
        (0.95872000, 0.86662400, 0.31082000),
        (0.95683400, 0.87412900, 0.32397400),
        (0.95499700, 0.88156900, 0.33747500),
        (0.95321500, 0.88894200, 0.35136900),
        (0.95154600, 0.89622600, 0.36562700),
        (0.95001800, 0.90340900, 0.38027100),
        (0.94868300, 0.91047300, 0.39528900),
        (0.94759400, 0.91739900, 0.41066500),
        (0.94680900, 0.92416800, 0.42637300),
        (0.94639200, 0.93076100, 0.44236700),
        (0.94640300, 0.93715900, 0.45859200),
        (0.94690300, 0.94334800, 0.47497000),
        (0.94793700, 0.94931800, 0.49142600),
        (0.94954500, 0.95506300, 0.50786000),
        (0.95174000, 0.96058700, 0.52420300),
        (0.95452900, 0.96589600, 0.54036100),
        (0.95789600, 0.97100300, 0.55627500),
        (0.96181200, 0.97592400, 0.57192500),
        (0.96624900, 0.98067800, 0.58720600),
        (0.97116200, 0.98528200, 0.60215400),
        (0.97651100, 0.98975300, 0.61676000),
        (0.98225700, 0.99410900, 0.63101700),
        (0.98836200, 0.99836400, 0.64492400),
    ),
    'magma': (
        (0.00146200, 0.00046600, 0.01386600),
        (0.00225800, 0.00129500, 0.01833100),
        (0.00327900, 0.00230500, 0.02370800),
        (0.00451200, 0.00349000, 0.02996500),
        (0.00595000, 0.00484300, 0.03713000),
        (0.00758800, 0.00635600, 0.04497300),
        (0.00942600, 0.00802200, 0.05284400),
        (0.01146500, 0.00982800, 0.06075000),
        (0.01370800, 0.01177100, 0.06866700),
        (0.01615600, 0.01384000, 0.07660300),
        (0.01881500, 0.01602600, 0.08458400),
        (0.02169200, 0.01832000, 0.09261000),
        (0.02479200, 0.02071500, 0.10067600),
        (0.02812300, 0.02320100, 0.10878700),
        (0.03169600, 0.02576500, 0.11696500),
        (0.03552000, 0.02839700, 0.12520900),
        (0.03960800, 0.03109000, 0.13351500),
        (0.04383000, 0.03383000, 0.14188600),
        (0.04806200, 0.03660700, 0.15032700),
        (0.05232000, 0.03940700, 0.15884100),
        (0.05661500, 0.04216000, 0.16744600),
        (0.06094900, 0.04479400, 0.17612900),
        (0.06533000, 0.04731800, 0.18489200),
        (0.06976400, 0.04972600, 0.19373500),
        (0.07425700, 0.05201700, 0.20266000),
        (0.07881500, 0.05418400, 0.21166700),
        (0.08344600, 0.05622500, 0.22075500),
        (0.08815500, 0.05813300, 0.22992200),
        (0.09294900, 0.05990400, 0.23916400),
        (0.09783300, 0.06153100, 0.24847700),
        (0.10281500, 0.06301000, 0.25785400),
        (0.10789900, 0.06433500, 0.26728900),
        (0.11309400, 0.06549200, 0.27678400),
        (0.11840500, 0.06647900, 0.28632100),
        (0.12383300, 0.06729500, 0.29587900),
        (0.12938000, 0.06793500, 0.30544300),
        (0.13505300, 0.06839100, 0.31500000),
        (0.14085800, 0.06865400, 0.32453800),
        (0.14678500, 0.06873800, 0.33401100),
        (0.15283900, 0.06863700, 0.34340400),
        (0.15901800, 0.06835400, 0.35268800),
        (0.16530800, 0.06791100, 0.36181600),
        (0.17171300, 0.06730500, 0.37077100),
        (0.17821200, 0.06657600, 0.37949700),
        (0.18480100, 0.06573200, 0.38797300),
        (0.19146000, 0.06481800, 0.39615200),
        (0.19817700, 0.06386200, 0.40400900),
        (0.20493500, 0.06290700, 0.41151400),
        (0.21171800, 0.06199200, 0.41864700),
        (0.21851200, 0.06115800, 0.42539200),
        (0.22530200, 0.06044500, 0.43174200),
        (0.23207700, 0.05988900, 0.43769500),
        (0.23882600, 0.05951700, 0.44325600),
        (0.24554300, 0.05935200, 0.44843600),
        (0.25222000, 0.05941500, 0.45324800),
        (0.25885700, 0.05970600, 0.45771000),
        (0.26544700, 0.06023700, 0.46184000),
        (0.27199400, 0.06099400, 0.46566000),
        (0.27849300, 0.06197800, 0.46919000),
        (0.28495100, 0.06316800, 0.47245100),
        (0.29136600, 0.06455300, 0.47546200),
        (0.29774000, 0.06611700, 0.47824300),
        (0.30408100, 0.06783500, 0.48081200),
        (0.31038200, 0.06970200, 0.48318600),
        (0.31665400, 0.07169000, 0.48538000),
        (0.32289900, 0.07378200, 0.48740800),
        (0.32911400, 0.07597200, 0.48928700),
        (0.33530800, 0.07823600, 0.49102400),
        (0.34148200, 0.08056400, 0.49263100),
        (0.34763600, 0.08294600, 0.49412100),
        (0.35377300, 0.08537300, 0.49550100),
        (0.35989800, 0.08783100, 0.49677800),
        (0.36601200, 0.09031400, 0.49796000),
        (0.37211600, 0.09281600, 0.49905300),
        (0.37821100, 0.09533200, 0.50006700),
        (0.38429900, 0.09785500, 0.50100200),
        (0.39038400, 0.10037900, 0.50186400),
        (0.39646700, 0.10290200, 0.50265800),
        (0.40254800, 0.10542000, 0.50338600),
        (0.40862900, 0.10793000, 0.50405200),
        (0.41470900, 0.11043100, 0.50466200),
        (0.42079100, 0.11292000, 0.50521500),
        (0.42687700, 0.11539500, 0.50571400),
        (0.43296700, 0.11785500, 0.50616000),
        (0.43906200, 0.12029800, 0.50655500),
        (0.44516300, 0.12272400, 0.50690100),
        (0.45127100, 0.12513200, 0.50719800),
        (0.45738600, 0.12752200, 0.50744800),
        (0.46350800, 0.12989300, 0.50765200),
        (0.46964000, 0.13224500, 0.50780900),
        (0.47578000, 0.13457700, 0.50792100),
        (0.48192900, 0.13689100, 0.50798900),
        (0.48808800, 0.13918600, 0.50801100),
        (0.49425800, 0.14146200, 0.50798800),
        (0.50043800, 0.14371900, 0.50792000),
        (0.50662900, 0.14595800, 0.50780600),
        (0.51283100, 0.14817900, 0.50764800),
        (0.51904500, 0.15038300, 0.50744300),
        (0.52527000, 0.15256900, 0.50719200),
        (0.53150700, 0.15473900, 0.50689500),
        (0.53775500, 0.15689400, 0.50655100),
        (0.54401500, 0.15903300, 0.50615900),
        (0.55028700, 0.16115800, 0.50571900),
        (0.55657100, 0.16326900, 0.50523000),
        (0.56286600, 0.16536800, 0.50469200),
        (0.56917200, 0.16745400, 0.50410500),
        (0.57549000, 0.16953000, 0.50346600),
        (0.58181900, 0.17159600, 0.50277700),
        (0.58815800, 0.17365200, 0.50203500),
        (0.59450800, 0.17570100, 0.50124100),
        (0.60086800, 0.17774300, 0.50039400),
        (0.60723800, 0.17977900, 0.49949200),
        (0.61361700, 0.18181100, 0.49853600),
        (0.62000500, 0.18384000, 0.49752400),
        (0.62640100, 0.18586700, 0.49645600),
        (0.63280500, 0.18789300, 0.49533200),
        (0.63921600, 0.18992100, 0.49415000),
        (0.64563300, 0.19195200, 0.49291000),
        (0.65205600, 0.19398600, 0.49161100),
        (0.65848300, 0.19602700, 0.49025300),
        (0.66491500, 0.19807500, 0.48883600),
        (0.67134900, 0.20013300, 0.48735800),
        (0.67778600, 0.20220300, 0.48581900),
        (0.68422400, 0.20428600, 0.48421900),
        (0.69066100, 0.20638400, 0.48255800),
        (0.69709800, 0.20850100, 0.48083500),
        (0.70353200, 0.21063800, 0.47904900),
        (0.70996200, 0.21279700, 0.47720100),
        (0.71638700, 0.21498200, 0.47529000),
        (0.72280500, 0.21719400, 0.47331600),
        (0.72921600, 0.21943700, 0.47127900),
        (0.73561600, 0.22171300, 0.46918000),
        (0.74200400, 0.22402500, 0.46701800),
        (0.74837800, 0.22637700, 0.46479400),
        (0.75473700, 0.22877200, 0.46250900),
        (0.76107700, 0.23121400, 0.46016200),
        (0.76739800, 0.23370500, 0.45775500),
        (0.77369500, 0.23624900, 0.45528900),
        (0.77996800, 0.23885100, 0.45276500),
        (0.78621200, 0.24151400, 0.45018400),
        (0.79242700, 0.24424200, 0.44754300),
        (0.79860800, 0.24704000, 0.44484800),
        (0.80475200, 0.24991100, 0.44210200),
        (0.81085500, 0.25286100, 0.43930500),
        (0.81691400, 0.25589500, 0.43646100),
        (0.82292600, 0.25901600, 0.43357300),
        (0.82888600, 0.26222900, 0.43064400),
        (0.83479100, 0.26554000, 0.42767100),
        (0.84063600, 0.26895300, 0.42466600),
        (0.84641600, 0.27247300, 0.42163100),
        (0.85212600, 0.27610600, 0.41857300),
        (0.85776300, 0.27985700, 0.41549600),
        (0.86332000, 0.28372900, 0.41240300),
        (0.86879300, 0.28772800, 0.40930300),
        (0.87417600, 0.29185900, 0.40620500),
        (0.87946400, 0.29612500, 0.40311800),
        (0.88465100, 0.30053000, 0.40004700),
        (0.88973100, 0.30507900, 0.39700200),
        (0.89470000, 0.30977300, 0.39399500),
        (0.89955200, 0.31461600, 0.39103700),
        (0.90428100, 0.31961000, 0.38813700),
        (0.90888400, 0.32475500, 0.38530800),
        (0.91335400, 0.33005200, 0.38256300),
        (0.91768900, 0.33550000, 0.37991500),
        (0.92188400, 0.34109800, 0.37737600),
        (0.92593700, 0.34684400, 0.37495900),
        (0.92984500, 0.35273400, 0.37267700),
        (0.93360600, 0.35876400, 0.37054100),
        (0.93722100, 0.36492900, 0.36856700),
        (0.94068700, 0.37122400, 0.36676200),
        (0.94400600, 0.37764300, 0.36513600),
        (0.94718000, 0.38417800, 0.36370100),
        (0.95021000, 0.39082000, 0.36246800),
        (0.95309900, 0.39756300, 0.36143800),
        (0.95584900, 0.40440000, 0.36061900),
        (0.95846400, 0.41132400, 0.36001400),
        (0.96094900, 0.41832300, 0.35963000),
        (0.96331000, 0.42539000, 0.35946900),
        (0.96554900, 0.43251900, 0.35952900),
        (0.96767100, 0.43970300, 0.35981000),
        (0.96968000, 0.44693600, 0.36031100),
        (0.97158200, 0.45421000, 0.36103000),
        (0.97338100, 0.46152000, 0.36196500),
        (0.97508200, 0.46886100, 0.36311100),
        (0.97669000, 0.47622600, 0.36446600),
        (0.97821000, 0.48361200, 0.36602500),
        (0.97964500, 0.49101400, 0.36778300),
        (0.98100000, 0.49842800, 0.36973400),
        (0.98227900, 0.50585100, 0.37187400),
        (0.98348500, 0.51328000, 0.37419800),
        (0.98462200, 0.52071300, 0.37669800),
        (0.98569300, 0.52814800, 0.37937100),
        (0.98670000, 0.53558200, 0.38221000),
        (0.98764600, 0.54301500, 0.38521000),
        (0.98853300, 0.55044600, 0.38836500),
        (0.98936300, 0.55787300, 0.39167100),
        (0.99013800, 0.56529600, 0.39512200),
        (0.99087100, 0.57270600, 0.39871400),
        (0.99155800, 0.58010700, 0.40244100),
        (0.99219600, 0.58750200, 0.40629900),
        (0.99278500, 0.59489100, 0.41028300),
        (0.99332600, 0.60227500, 0.41439000),
        (0.99383400, 0.60964400, 0.41861300),
        (0.99430900, 0.61699900, 0.42295000),
        (0.99473800, 0.62435000, 0.42739700),
        (0.99512200, 0.63169600, 0.43195100),
        (0.99548000, 0.63902700, 0.43660700),
        (0.99581000, 0.64634400, 0.44136100),
        (0.99609600, 0.65365900, 0.44621300),
        (0.99634100, 0.66096900, 0.45116000),
        (0.99658000, 0.66825600, 0.45619200),
        (0.99677500, 0.67554100, 0.46131400),
        (0.99692500, 0.68282800, 0.46652600),
        (0.99707700, 0.69008800, 0.47181100),
        (0.99718600, 0.69734900, 0.47718200),
        (0.99725400, 0.70461100, 0.48263500),
        (0.99732500, 0.71184800, 0.48815400),
        (0.99735100, 0.71908900, 0.49375500),
        (0.99735100, 0.72632400, 0.49942800),
        (0.99734100, 0.73354500, 0.50516700),
        (0.99728500, 0.74077200, 0.51098300),
        (0.99722800, 0.74798100, 0.51685900),
        (0.99713800, 0.75519000, 0.52280600),
        (0.99701900, 0.76239800, 0.52882100),
        (0.99689800, 0.76959100, 0.53489200),
        (0.99672700, 0.77679500, 0.54103900),
        (0.99657100, 0.78397700, 0.54723300),
        (0.99636900, 0.79116700, 0.55349900),
        (0.99616200, 0.79834800, 0.55982000),
        (0.99593200, 0.80552700, 0.56620200),
        (0.99568000, 0.81270600, 0.57264500),
        (0.99542400, 0.81987500, 0.57914000),
        (0.99513100, 0.82705200, 0.58570100),
        (0.99485100, 0.83421300, 0.59230700),
        (0.99452400, 0.84138700, 0.59898300),
        (0.99422200, 0.84854000, 0.60569600),
        (0.99386600, 0.85571100, 0.61248200),
        (0.99354500, 0.86285900, 0.61929900),
        (0.99317000, 0.87002400, 0.62618900),
        (0.99283100, 0.87716800, 0.63310900),
        (0.99244000, 0.88433000, 0.64009900),
        (0.99208900, 0.89147000, 0.64711600),
        (0.99168800, 0.89862700, 0.65420200),
        (0.99133200, 0.90576300, 0.66130900),
        (0.99093000, 0.91291500, 0.66848100),
        (0.99057000, 0.92004900, 0.67567500),
        (0.99017500, 0.92719600, 0.68292600),
        (0.98981500, 0.93432900, 0.69019800),
        (0.98943400, 0.94147000, 0.69751900),
        (0.98907700, 0.94860400, 0.70486300),
        (0.98871700, 0.95574200, 0.71224200),
        (0.98836700, 0.96287800, 0.71964900),
        (0.98803300, 0.97001200, 0.72707700),
        (0.98769100, 0.97715400, 0.73453600),
        (0.98738700, 0.98428800, 0.74200200),
        (0.98705300, 0.99143800, 0.74950400),
    ),
    'cividis': (
        (0.00000000, 0.13511200, 0.30475100),
        (0.00000000, 0.13806800, 0.31110500),
        (0.00000000, 0.14101300, 0.31757900),
        (0.00000000, 0.14395100, 0.32398200),
        (0.00000000, 0.14687700, 0.33047900),
        (0.00000000, 0.14979100, 0.33706500),
        (0.00000000, 0.15267300, 0.34370400),
        (0.00000000, 0.15537700, 0.35050000),
        (0.00000000, 0.15793200, 0.35752100),
        (0.00000000, 0.16049500, 0.36453400),
        (0.00000000, 0.16305800, 0.37160800),
        (0.00000000, 0.16562100, 0.37876900),
        (0.00000000, 0.16820400, 0.38590200),
        (0.00000000, 0.17080000, 0.39310000),
        (0.00000000, 0.17342000, 0.40035300),
        (0.00000000, 0.17608200, 0.40757700),
        (0.00000000, 0.17880200, 0.41476400),
        (0.00000000, 0.18161000, 0.42185900),
        (0.00000000, 0.18455000, 0.42880200),
        (0.00000000, 0.18691500, 0.43553200),
        (0.00000000, 0.18876900, 0.43956300),
        (0.00000000, 0.19095000, 0.44108500),
        (0.00000000, 0.19336600, 0.44156100),
        (0.00360200, 0.19591100, 0.44156400),
        (0.01785200, 0.19852800, 0.44124800),
        (0.03211000, 0.20119900, 0.44078500),
        (0.04620500, 0.20390300, 0.44019600),
        (0.05837800, 0.20662900, 0.43953100),
        (0.06896800, 0.20937200, 0.43886300),
        (0.07862400, 0.21212200, 0.43810500),
        (0.08746500, 0.21487900, 0.43734200),
        (0.09564500, 0.21764300, 0.43659300),
        (0.10340100, 0.22040600, 0.43579000),
        (0.11065800, 0.22317000, 0.43506700),
        (0.11761200, 0.22593500, 0.43430800),
        (0.12429100, 0.22869700, 0.43354700),
        (0.13066900, 0.23145800, 0.43284000),
        (0.13683000, 0.23421600, 0.43214800),
        (0.14285200, 0.23697200, 0.43140400),
        (0.14863800, 0.23972400, 0.43075200),
        (0.15426100, 0.24247500, 0.43012000),
        (0.15973300, 0.24522100, 0.42952800),
        (0.16511300, 0.24796500, 0.42890800),
        (0.17036200, 0.25070700, 0.42832500),
        (0.17549000, 0.25344400, 0.42779000),
        (0.18050300, 0.25618000, 0.42729900),
        (0.18545300, 0.25891400, 0.42678800),
        (0.19030300, 0.26164400, 0.42632900),
        (0.19505700, 0.26437200, 0.42592400),
        (0.19976400, 0.26709900, 0.42549700),
        (0.20438500, 0.26982300, 0.42512600),
        (0.20892600, 0.27254600, 0.42480900),
        (0.21343100, 0.27526600, 0.42448000),
        (0.21786300, 0.27798500, 0.42420600),
        (0.22226400, 0.28070200, 0.42391400),
        (0.22659800, 0.28341900, 0.42367800),
        (0.23087100, 0.28613400, 0.42349800),
        (0.23512000, 0.28884800, 0.42330400),
        (0.23931200, 0.29156200, 0.42316700),
        (0.24348500, 0.29427400, 0.42301400),
        (0.24760500, 0.29698600, 0.42291700),
        (0.25167500, 0.29969800, 0.42287300),
        (0.25573100, 0.30240900, 0.42281400),
        (0.25974000, 0.30512000, 0.42281000),
        (0.26373800, 0.30783100, 0.42278900),
        (0.26769300, 0.31054200, 0.42282100),
        (0.27163900, 0.31325300, 0.42283700),
        (0.27551300, 0.31596500, 0.42297900),
        (0.27941100, 0.31867700, 0.42303100),
        (0.28324000, 0.32139000, 0.42321100),
        (0.28706500, 0.32410300, 0.42337300),
        (0.29088400, 0.32681600, 0.42351700),
        (0.29466900, 0.32953100, 0.42371600),
        (0.29842100, 0.33224700, 0.42397300),
        (0.30216900, 0.33496300, 0.42421300),
        (0.30588600, 0.33768100, 0.42451200),
        (0.30960100, 0.34039900, 0.42479000),
        (0.31328700, 0.34312000, 0.42512000),
        (0.31694100, 0.34584200, 0.42551200),
        (0.32059500, 0.34856500, 0.42588900),
        (0.32425000, 0.35128900, 0.42625000),
        (0.32787500, 0.35401600, 0.42667000),
        (0.33147400, 0.35674400, 0.42714400),
        (0.33507300, 0.35947400, 0.42760500),
        (0.33867300, 0.36220600, 0.42805300),
        (0.34224600, 0.36493900, 0.42855900),
        (0.34579300, 0.36767600, 0.42912700),
        (0.34934100, 0.37041400, 0.42968500),
        (0.35289200, 0.37315300, 0.43022600),
        (0.35641800, 0.37589600, 0.43082300),
        (0.35991600, 0.37864100, 0.43150100),
        (0.36344600, 0.38138800, 0.43207500),
        (0.36692300, 0.38413900, 0.43279600),
        (0.37043000, 0.38689000, 0.43342800),
        (0.37388400, 0.38964600, 0.43420900),
        (0.37737100, 0.39240400, 0.43489000),
        (0.38083000, 0.39516400, 0.43565300),
        (0.38426800, 0.39792800, 0.43647500),
        (0.38770500, 0.40069400, 0.43730500),
        (0.39115100, 0.40346400, 0.43809600),
        (0.39456800, 0.40623600, 0.43898600),
        (0.39799100, 0.40901100, 0.43984800),
        (0.40141800, 0.41179000, 0.44070800),
        (0.40482000, 0.41457200, 0.44164200),
        (0.40822600, 0.41735700, 0.44257000),
        (0.41160700, 0.42014500, 0.44357700),
        (0.41499200, 0.42293700, 0.44457800),
        (0.41838300, 0.42573300, 0.44556000),
        (0.42174800, 0.42853100, 0.44664000),
        (0.42512000, 0.43133400, 0.44769200),
        (0.42846200, 0.43414000, 0.44886400),
        (0.43181700, 0.43695000, 0.44998200),
        (0.43516800, 0.43976300, 0.45113400),
        (0.43850400, 0.44258000, 0.45234100),
        (0.44181000, 0.44540200, 0.45365900),
        (0.44514800, 0.44822600, 0.45488500),
        (0.44844700, 0.45105300, 0.45626400),
        (0.45175900, 0.45388700, 0.45758200),
        (0.45507200, 0.45671800, 0.45897600),
        (0.45836600, 0.45955200, 0.46045700),
        (0.46161600, 0.46240500, 0.46196900),
        (0.46494700, 0.46524100, 0.46339500),
        (0.46825400, 0.46808300, 0.46490800),
        (0.47150100, 0.47096000, 0.46635700),
        (0.47481200, 0.47383200, 0.46768100),
        (0.47818600, 0.47669900, 0.46884500),
        (0.48162200, 0.47957300, 0.46976700),
        (0.48514100, 0.48245100, 0.47038400),
        (0.48869700, 0.48531800, 0.47100800),
        (0.49227800, 0.48819800, 0.47145300),
        (0.49591300, 0.49107600, 0.47175100),
        (0.49955200, 0.49396000, 0.47203200),
        (0.50318500, 0.49685100, 0.47230500),
        (0.50686600, 0.49974300, 0.47243200),
        (0.51054000, 0.50264300, 0.47255000),
        (0.51422600, 0.50554600, 0.47264000),
        (0.51792000, 0.50845400, 0.47270700),
        (0.52164300, 0.51136700, 0.47263900),
        (0.52534800, 0.51428500, 0.47266000),
        (0.52908600, 0.51720700, 0.47254300),
        (0.53282900, 0.52013500, 0.47240100),
        (0.53655300, 0.52306700, 0.47235200),
        (0.54030700, 0.52600500, 0.47216300),
        (0.54406900, 0.52894800, 0.47194700),
        (0.54784000, 0.53189500, 0.47170400),
        (0.55161200, 0.53484900, 0.47143900),
        (0.55539300, 0.53780700, 0.47114700),
        (0.55918100, 0.54077100, 0.47082900),
        (0.56297200, 0.54374100, 0.47048800),
        (0.56680200, 0.54671500, 0.46998800),
        (0.57060700, 0.54969500, 0.46959300),
        (0.57441700, 0.55268200, 0.46917200),
        (0.57823600, 0.55567300, 0.46872400),
        (0.58208700, 0.55867000, 0.46811800),
        (0.58591600, 0.56167400, 0.46761800),
        (0.58975300, 0.56468200, 0.46709000),
        (0.59362200, 0.56769700, 0.46640100),
        (0.59746900, 0.57071800, 0.46582100),
        (0.60135400, 0.57374300, 0.46507400),
        (0.60521100, 0.57677700, 0.46444100),
        (0.60910500, 0.57981600, 0.46363800),
        (0.61297700, 0.58286100, 0.46295000),
        (0.61685200, 0.58591300, 0.46223700),
        (0.62076500, 0.58897000, 0.46135100),
        (0.62465400, 0.59203400, 0.46058300),
        (0.62857600, 0.59510400, 0.45964100),
        (0.63250600, 0.59818000, 0.45866800),
        (0.63641200, 0.60126400, 0.45781800),
        (0.64035200, 0.60435400, 0.45679100),
        (0.64427000, 0.60745000, 0.45588600),
        (0.64822200, 0.61055300, 0.45480100),
        (0.65217800, 0.61366400, 0.45368900),
        (0.65611400, 0.61678000, 0.45270200),
        (0.66008200, 0.61990400, 0.45153400),
        (0.66405500, 0.62303400, 0.45033800),
        (0.66800800, 0.62617100, 0.44927000),
        (0.67199100, 0.62931600, 0.44801800),
        (0.67598100, 0.63246800, 0.44673600),
        (0.67997900, 0.63562600, 0.44542400),
        (0.68395000, 0.63879300, 0.44425100),
        (0.68795700, 0.64196600, 0.44288600),
        (0.69197100, 0.64514500, 0.44149100),
        (0.69598500, 0.64833400, 0.44007200),
        (0.70000800, 0.65152900, 0.43862400),
        (0.70403700, 0.65473100, 0.43714700),
        (0.70806700, 0.65794200, 0.43564700),
        (0.71210500, 0.66116000, 0.43411700),
        (0.71617700, 0.66438400, 0.43238600),
        (0.72022200, 0.66761800, 0.43080500),
        (0.72427400, 0.67085900, 0.42919400),
        (0.72833400, 0.67410700, 0.42755400),
        (0.73242200, 0.67736400, 0.42571700),
        (0.73648800, 0.68062900, 0.42402800),
        (0.74058900, 0.68390000, 0.42213100),
        (0.74466400, 0.68718100, 0.42039300),
        (0.74877200, 0.69047000, 0.41844800),
        (0.75288600, 0.69376600, 0.41647200),
        (0.75697500, 0.69707100, 0.41465900),
        (0.76109600, 0.70038400, 0.41263800),
        (0.76522300, 0.70370500, 0.41058700),
        (0.76935300, 0.70703500, 0.40851600),
        (0.77348600, 0.71037300, 0.40642200),
        (0.77765100, 0.71371900, 0.40411200),
        (0.78179500, 0.71707400, 0.40196600),
        (0.78596500, 0.72043800, 0.39961300),
        (0.79011600, 0.72381000, 0.39742300),
        (0.79429800, 0.72719000, 0.39501600),
        (0.79848000, 0.73058000, 0.39259700),
        (0.80266700, 0.73397800, 0.39015300),
        (0.80685900, 0.73738500, 0.38768400),
        (0.81105400, 0.74080100, 0.38519800),
        (0.81527400, 0.74422600, 0.38250400),
        (0.81949900, 0.74765900, 0.37978500),
        (0.82372900, 0.75110100, 0.37704300),
        (0.82795900, 0.75455300, 0.37429200),
        (0.83219200, 0.75801400, 0.37152900),
        (0.83642900, 0.76148300, 0.36874700),
        (0.84069300, 0.76496200, 0.36574600),
        (0.84495700, 0.76845000, 0.36274100),
        (0.84922300, 0.77194700, 0.35972900),
        (0.85351500, 0.77545400, 0.35650000),
        (0.85780900, 0.77896900, 0.35325900),
        (0.86210500, 0.78249400, 0.35001100),
        (0.86642100, 0.78602800, 0.34657100),
        (0.87071700, 0.78957200, 0.34333300),
        (0.87505700, 0.79312500, 0.33968500),
        (0.87937800, 0.79668700, 0.33624100),
        (0.88372000, 0.80025800, 0.33259900),
        (0.88808100, 0.80383900, 0.32877000),
        (0.89244000, 0.80743000, 0.32496800),
        (0.89681800, 0.81103000, 0.32098200),
        (0.90119500, 0.81463900, 0.31702100),
        (0.90558900, 0.81825700, 0.31288900),
        (0.91000000, 0.82188500, 0.30859400),
        (0.91440700, 0.82552200, 0.30434800),
        (0.91882800, 0.82916800, 0.29996000),
        (0.92327900, 0.83282200, 0.29524400),
        (0.92772400, 0.83648600, 0.29061100),
        (0.93218000, 0.84015900, 0.28588000),
        (0.93666000, 0.84384100, 0.28087600),
        (0.94114700, 0.84753000, 0.27581500),
        (0.94565400, 0.85122800, 0.27053200),
        (0.95017800, 0.85493300, 0.26508500),
        (0.95472500, 0.85864600, 0.25936500),
        (0.95928400, 0.86236500, 0.25356300),
        (0.96387200, 0.86608900, 0.24744500),
        (0.96846900, 0.86981900, 0.24131000),
        (0.97311400, 0.87355000, 0.23467700),
        (0.97778000, 0.87728100, 0.22795400),
        (0.98249700, 0.88100800, 0.22087800),
        (0.98729300, 0.88471800, 0.21333600),
        (0.99221800, 0.88838500, 0.20546800),
        (0.99484700, 0.89295400, 0.20344500),
        (0.99524900, 0.89838400, 0.20756100),
        (0.99550300, 0.90386600, 0.21237000),
        (0.99573700, 0.90934400, 0.21777200),
    ),
    'gray': (
        (0.00000000, 0.00000000, 0.00000000),
        (0.00392157, 0.00392157, 0.00392157),
        (0.00784314, 0.00784314, 0.00784314),
        (0.01176471, 0.01176471, 0.01176471),
        (0.01568627, 0.01568627, 0.01568627),
        (0.01960784, 0.01960784, 0.01960784),
        (0.02352941, 0.02352941, 0.02352941),
        (0.02745098, 0.02745098, 0.02745098),
        (0.03137255, 0.03137255, 0.03137255),
        (0.03529412, 0.03529412, 0.03529412),
        (0.03921569, 0.03921569, 0.03921569),
        (0.04313725, 0.04313725, 0.04313725),
        (0.04705882, 0.04705882, 0.04705882),
        (0.05098039, 0.05098039, 0.05098039),
        (0.05490196, 0.05490196, 0.05490196),
        (0.05882353, 0.05882353, 0.05882353),
        (0.06274510, 0.06274510, 0.06274510),
        (0.06666667, 0.06666667, 0.06666667),
        (0.07058824, 0.07058824, 0.07058824),
        (0.07450980, 0.07450980, 0.07450980),
        (0.07843137, 0.07843137, 0.07843137),
        (0.08235294, 0.08235294, 0.08235294),
        (0.08627451, 0.08627451, 0.08627451),
        (0.09019608, 0.09019608, 0.09019608),
        (0.09411765, 0.09411765, 0.09411765),
        (0.09803922, 0.09803922, 0.09803922),
        (0.10196078, 0.10196078, 0.10196078),
        (0.10588235, 0.10588235, 0.10588235),
        (0.10980392, 0.10980392, 0.10980392),
        (0.11372549, 0.11372549, 0.11372549),
        (0.11764706, 0.11764706, 0.11764706),
        (0.12156863, 0.12156863, 0.12156863),
        (0.12549020, 0.12549020, 0.12549020),
        (0.12941176, 0.12941176, 0.12941176),
        (0.13333333, 0.13333333, 0.13333333),
        (0.13725490, 0.13725490, 0.13725490),
        (0.14117647, 0.14117647, 0.14117647),
        (0.14509804, 0.14509804, 0.14509804),
        (0.14901961, 0.14901961, 0.14901961),
        (0.15294118, 0.15294118, 0.15294118),
        (0.15686275, 0.15686275, 0.15686275),
        (0.16078431, 0.16078431, 0.16078431),
        (0.16470588, 0.16470588, 0.16470588),
        (0.16862745, 0.16862745, 0.16862745),
        (0.17254902, 0.17254902, 0.17254902),
        (0.17647059, 0.17647059, 0.17647059),
        (0.18039216, 0.18039216, 0.18039216),
        (0.18431373, 0.18431373, 0.18431373),
        (0.18823529, 0.18823529, 0.18823529),
        (0.19215686, 0.19215686, 0.19215686),
        (0.19607843, 0.19607843, 0.19607843),
        (0.20000000, 0.20000000, 0.20000000),
        (0.20392157, 0.20392157, 0.20392157),
        (0.20784314, 0.20784314, 0.20784314),
        (0.21176471, 0.21176471, 0.21176471),
        (0.21568627, 0.21568627, 0.21568627),
        (0.21960784, 0.21960784, 0.21960784),
        (0.22352941, 0.22352941, 0.22352941),
        (0.22745098, 0.22745098, 0.22745098),
        (0.23137255, 0.23137255, 0.23137255),
        (0.23529412, 0.23529412, 0.23529412),
        (0.23921569, 0.23921569, 0.23921569),
        (0.24313725, 0.24313725, 0.24313725),
        (0.24705882, 0.24705882, 0.24705882),
        (0.25098039, 0.25098039, 0.25098039),
        (0.25490196, 0.25490196, 0.25490196),
        (0.25882353, 0.25882353, 0.25882353),
        (0.26274510, 0.26274510, 0.26274510),
        (0.26666667, 0.26666667, 0.26666667),
        (0.27058824, 0.27058824, 0.27058824),
        (0.27450980, 0.27450980, 0.27450980),
        (0.27843137, 0.27843137, 0.27843137),
        (0.28235294, 0.28235294, 0.28235294),
        (0.28627451, 0.28627451, 0.28627451),
        (0.29019608, 0.29019608, 0.29019608),
        (0.29411765, 0.29411765, 0.29411765),
        (0.29803922, 0.29803922, 0.29803922),
        (0.30196078, 0.30196078, 0.30196078),
        (0.30588235, 0.30588235, 0.30588235),
        (0.30980392, 0.30980392, 0.30980392),
        (0.31372549, 0.31372549, 0.31372549),
        (0.31764706, 0.31764706, 0.31764706),
        (0.32156863, 0.32156863, 0.32156863),
        (0.32549020, 0.32549020, 0.32549020),
        (0.32941176, 0.32941176, 0.32941176),
        (0.33333333, 0.33333333, 0.33333333),
        (0.33725490, 0.33725490, 0.33725490),
        (0.34117647, 0.34117647, 0.34117647),
        (0.34509804, 0.34509804, 0.34509804),
        (0.34901961, 0.34901961, 0.34901961),
        (0.35294118, 0.35294118, 0.35294118),
        (0.35686275, 0.35686275, 0.35686275),
        (0.36078431, 0.36078431, 0.36078431),
        (0.36470588, 0.36470588, 0.36470588),
        (0.36862745, 0.36862745, 0.36862745),
        (0.37254902, 0.37254902, 0.37254902),
        (0.37647059, 0.37647059, 0.37647059),
        (0.38039216, 0.38039216, 0.38039216),
        (0.38431373, 0.38431373, 0.38431373),
        (0.38823529, 0.38823529, 0.38823529),
        (0.39215686, 0.39215686, 0.39215686),
        (0.39607843, 0.39607843, 0.39607843),
        (0.40000000, 0.40000000, 0.40000000),
        (0.40392157, 0.40392157, 0.40392157),
        (0.40784314, 0.40784314, 0.40784314),
        (0.41176471, 0.41176471, 0.41176471),
        (0.41568627, 0.41568627, 0.41568627),
        (0.41960784, 0.41960784, 0.41960784),
        (0.42352941, 0.42352941, 0.42352941),
        (0.42745098, 0.42745098, 0.42745098),
        (0.43137255, 0.43137255, 0.43137255),
        (0.43529412, 0.43529412, 0.43529412),
        (0.43921569, 0.43921569, 0.43921569),
        (0.44313725, 0.44313725, 0.44313725),
        (0.44705882, 0.44705882, 0.44705882),
        (0.45098039, 0.45098039, 0.45098039),
        (0.45490196, 0.45490196, 0.45490196),
        (0.45882353, 0.45882353, 0.45882353),
        (0.46274510, 0.46274510, 0.46274510),
        (0.46666667, 0.46666667, 0.46666667),
        (0.47058824, 0.47058824, 0.47058824),
        (0.47450980, 0.47450980, 0.47450980),
        (0.47843137, 0.47843137, 0.47843137),
        (0.48235294, 0.48235294, 0.48235294),
        (0.48627451, 0.48627451, 0.48627451),
        (0.49019608, 0.49019608, 0.49019608),
        (0.49411765, 0.49411765, 0.49411765),
        (0.49803922, 0.49803922, 0.49803922),
        (0.50196078, 0.50196078, 0.50196078),
        (0.50588235, 0.50588235, 0.50588235),
        (0.50980392, 0.50980392, 0.50980392),
        (0.51372549, 0.51372549, 0.51372549),
        (0.51764706, 0.51764706, 0.51764706),
        (0.52156863, 0.52156863, 0.52156863),
        (0.52549020, 0.52549020, 0.52549020),
        (0.52941176, 0.52941176, 0.52941176),
        (0.53333333, 0.53333333, 0.53333333),
        (0.53725490, 0.53725490, 0.53725490),
        (0.54117647, 0.54117647, 0.54117647),
        (0.54509804, 0.54509804, 0.54509804),
        (0.54901961, 0.54901961, 0.54901961),
        (0.55294118, 0.55294118, 0.55294118),
        (0.55686275, 0.55686275, 0.55686275),
        (0.56078431, 0.56078431, 0.56078431),
        (0.56470588, 0.56470588, 0.56470588),
        (0.56862745, 0.56862745, 0.56862745),
        (0.57254902, 0.57254902, 0.57254902),
        (0.57647059, 0.57647059, 0.57647059),
        (0.58039216, 0.58039216, 0.58039216),
        (0.58431373, 0.58431373, 0.58431373),
        (0.58823529, 0.58823529, 0.58823529),
        (0.59215686, 0.59215686, 0.59215686),
        (0.59607843, 0.59607843, 0.59607843),
        (0.60000000, 0.60000000, 0.60000000),
        (0.60392157, 0.60392157, 0.60392157),
        (0.60784314, 0.60784314, 0.60784314),
        (0.61176471, 0.61176471, 0.61176471),
        (0.61568627, 0.61568627, 0.61568627),
        (0.61960784, 0.61960784, 0.61960784),
        (0.62352941, 0.62352941, 0.62352941),
        (0.62745098, 0.62745098, 0.62745098),
        (0.63137255, 0.63137255, 0.63137255),
        (0.63529412, 0.63529412, 0.63529412),
        (0.63921569, 0.63921569, 0.63921569),
        (0.64313725, 0.64313725, 0.64313725),
        (0.64705882, 0.64705882, 0.64705882),
        (0.65098039, 0.65098039, 0.65098039),
        (0.65490196, 0.65490196, 0.65490196),
        (0.65882353, 0.65882353, 0.65882353),
        (0.66274510, 0.66274510, 0.66274510),
        (0.66666667, 0.66666667, 0.66666667),
        (0.67058824, 0.67058824, 0.67058824),
        (0.67450980, 0.67450980, 0.67450980),
        (0.67843137, 0.67843137, 0.67843137),
        (0.68235294, 0.68235294, 0.68235294),
        (0.68627451, 0.68627451, 0.68627451),
        (0.69019608, 0.69019608, 0.69019608),
        (0.69411765, 0.69411765, 0.69411765),
        (0.69803922, 0.69803922, 0.69803922),
        (0.70196078, 0.70196078, 0.70196078),
        (0.70588235, 0.70588235, 0.70588235),
        (0.70980392, 0.70980392, 0.70980392),
        (0.71372549, 0.71372549, 0.71372549),
        (0.71764706, 0.71764706, 0.71764706),
        (0.72156863, 0.72156863, 0.72156863),
        (0.72549020, 0.72549020, 0.72549020),
        (0.72941176, 0.72941176, 0.72941176),
        (0.73333333, 0.73333333, 0.73333333),
        (0.73725490, 0.73725490, 0.73725490),
        (0.74117647, 0.74117647, 0.74117647),
        (0.74509804, 0.74509804, 0.74509804),
        (0.74901961, 0.74901961, 0.74901961),
        (0.75294118, 0.75294118, 0.75294118),
        (0.75686275, 0.75686275, 0.75686275),
        (0.76078431, 0.76078431, 0.76078431),
        (0.76470588, 0.76470588, 0.76470588),
        (0.76862745, 0.76862745, 0.76862745),
        (0.77254902, 0.77254902, 0.77254902),
        (0.77647059, 0.77647059, 0.77647059),
        (0.78039216, 0.78039216, 0.78039216),
        (0.78431373, 0.78431373, 0.78431373),
        (0.78823529, 0.78823529, 0.78823529),
        (0.79215686, 0.79215686, 0.79215686),
        (0.79607843, 0.79607843, 0.79607843),
        (0.80000000, 0.80000000, 0.80000000),
        (0.80392157, 0.80392157, 0.80392157),
        (0.80784314, 0.80784314, 0.80784314),
        (0.81176471, 0.81176471, 0.81176471),
        (0.81568627, 0.81568627, 0.81568627),
        (0.81960784, 0.81960784, 0.81960784),
        (0.82352941, 0.82352941, 0.82352941),
        (0.82745098, 0.82745098, 0.82745098),
        (0.83137255, 0.83137255, 0.83137255),
        (0.83529412, 0.83529412, 0.83529412),
        (0.83921569, 0.83921569, 0.83921569),
        (0.84313725, 0.84313725, 0.84313725),
        (0.84705882, 0.84705882, 0.84705882),
        (0.85098039, 0.85098039, 0.85098039),
        (0.85490196, 0.85490196, 0.85490196),
        (0.85882353, 0.85882353, 0.85882353),
        (0.86274510, 0.86274510, 0.86274510),
        (0.86666667, 0.86666667, 0.86666667),
        (0.87058824, 0.87058824, 0.87058824),
        (0.87450980, 0.87450980, 0.87450980),
        (0.87843137, 0.87843137, 0.87843137),
        (0.88235294, 0.88235294, 0.88235294),
        (0.88627451, 0.88627451, 0.88627451),
        (0.89019608, 0.89019608, 0.89019608),
        (0.89411765, 0.89411765, 0.89411765),
        (0.89803922, 0.89803922, 0.89803922),
        (0.90196078, 0.90196078, 0.90196078),
        (0.90588235, 0.90588235, 0.90588235),
        (0.90980392, 0.90980392, 0.90980392),
        (0.91372549, 0.91372549, 0.91372549),
        (0.91764706, 0.91764706, 0.91764706),
        (0.92156863, 0.92156863, 0.92156863),
        (0.92549020, 0.92549020, 0.92549020),
        (0.92941176, 0.92941176, 0.92941176),
        (0.93333333, 0.93333333, 0.93333333),
        (0.93725490, 0.93725490, 0.93725490),
        (0.94117647, 0.94117647, 0.94117647),
        (0.94509804, 0.94509804, 0.94509804),
        (0.94901961, 0.94901961, 0.94901961),
        (0.95294118, 0.95294118, 0.95294118),
        (0.95686275, 0.95686275, 0.95686275),
        (0.96078431, 0.96078431, 0.96078431),
        (0.96470588, 0.96470588, 0.96470588),
        (0.96862745, 0.96862745, 0.96862745),
        (0.97254902, 0.97254902, 0.97254902),
        (0.97647059, 0.97647059, 0.97647059),
        (0.98039216, 0.98039216, 0.98039216),
        (0.98431373, 0.98431373, 0.98431373),
        (0.98823529, 0.98823529, 0.98823529),
        (0.99215686, 0.99215686, 0.99215686),
        (0.99607843, 0.99607843, 0.99607843),
        (1.00000000, 1.00000000, 1.00000000),
    ),
    'hot': (
        (0.04160000, 0.00000000, 0.00000000),
        (0.05189484, 0.00000000, 0.00000000),
        (0.06218969, 0.00000000, 0.00000000),
        (0.07248453, 0.00000000, 0.00000000),
        (0.08277938, 0.00000000, 0.00000000),
        (0.09307422, 0.00000000, 0.00000000),
        (0.10336906, 0.00000000, 0.00000000),
        (0.11366391, 0.00000000, 0.00000000),
        (0.12395875, 0.00000000, 0.00000000),
        (0.13425360, 0.00000000, 0.00000000),
        (0.14454844, 0.00000000, 0.00000000),
        (0.15484328, 0.00000000, 0.00000000),
        (0.16513813, 0.00000000, 0.00000000),
        (0.17543297, 0.00000000, 0.00000000),
        (0.18572782, 0.00000000, 0.00000000),
        (0.19602266, 0.00000000, 0.00000000),
        (0.20631750, 0.00000000, 0.00000000),
        (0.21661235, 0.00000000, 0.00000000),
        (0.22690719, 0.00000000, 0.00000000),
        (0.23720204, 0.00000000, 0.00000000),
        (0.24749688, 0.00000000, 0.00000000),
        (0.25779173, 0.00000000, 0.00000000),
        (0.26808657, 0.00000000, 0.00000000),
        (0.27838141, 0.00000000, 0.00000000),
        (0.28867626, 0.00000000, 0.00000000),
        (0.29897110, 0.00000000, 0.00000000),
        (0.30926595, 0.00000000, 0.00000000),
        (0.31956079, 0.00000000, 0.00000000),
        (0.32985563, 0.00000000, 0.00000000),
        (0.34015048, 0.00000000, 0.00000000),
        (0.35044532, 0.00000000, 0.00000000),
        (0.36074017, 0.00000000, 0.00000000),
        (0.37103501, 0.00000000, 0.00000000),
        (0.38132985, 0.00000000, 0.00000000),
        (0.39162470, 0.00000000, 0.00000000),
        (0.40191954, 0.00000000, 0.00000000),
        (0.41221439, 0.00000000, 0.00000000),
        (0.42250923, 0.00000000, 0.00000000),
        (0.43280407, 0.00000000, 0.00000000),
        (0.44309892, 0.00000000, 0.00000000),
        (0.45339376, 0.00000000, 0.00000000),
        (0.46368861, 0.00000000, 0.00000000),
        (0.47398345, 0.00000000, 0.00000000),
        (0.48427829, 0.00000000, 0.00000000),
        (0.49457314, 0.00000000, 0.00000000),
        (0.50486798, 0.00000000, 0.00000000),
        (0.51516283, 0.00000000, 0.00000000),
        (0.52545767, 0.00000000, 0.00000000),
        (0.53575251, 0.00000000, 0.00000000),
        (0.54604736, 0.00000000, 0.00000000),
        (0.55634220, 0.00000000, 0.00000000),
        (0.56663705, 0.00000000, 0.00000000),
        (0.57693189, 0.00000000, 0.00000000),
        (0.58722673, 0.00000000, 0.00000000),
        (0.59752158, 0.00000000, 0.00000000),
        (0.60781642, 0.00000000, 0.00000000),
        (0.61811127, 0.00000000, 0.00000000),
        (0.62840611, 0.00000000, 0.00000000),
        (0.63870096, 0.00000000, 0.00000000),
        (0.64899580, 0.00000000, 0.00000000),
        (0.65929064, 0.00000000, 0.00000000),
        (0.66958549, 0.00000000, 0.00000000),
        (0.67988033, 0.00000000, 0.00000000),
        (0.69017518, 0.00000000, 0.00000000),
        (0.70047002, 0.00000000, 0.00000000),
        (0.71076486, 0.00000000, 0.00000000),
        (0.72105971, 0.00000000, 0.00000000),
        (0.73135455, 0.00000000, 0.00000000),
        (0.74164940, 0.00000000, 0.00000000),
        (0.75194424, 0.00000000, 0.00000000),
        (0.76223908, 0.00000000, 0.00000000),
        (0.77253393, 0.00000000, 0.00000000),
        (0.78282877, 0.00000000, 0.00000000),
        (0.79312362, 0.00000000, 0.00000000),
        (0.80341846, 0.00000000, 0.00000000),
        (0.81371330, 0.00000000, 0.00000000),
        (0.82400815, 0.00000000, 0.00000000),
        (0.83430299, 0.00000000, 0.00000000),
        (0.84459784, 0.00000000, 0.00000000),
        (0.85489268, 0.00000000, 0.00000000),
        (0.86518752, 0.00000000, 0.00000000),
        (0.87548237, 0.00000000, 0.00000000),
        (0.88577721, 0.00000000, 0.00000000),
        (0.89607206, 0.00000000, 0.00000000),
        (0.90636690, 0.00000000, 0.00000000),
        (0.91666174, 0.00000000, 0.00000000),
        (0.92695659, 0.00000000, 0.00000000),
        (0.93725143, 0.00000000, 0.00000000),
        (0.94754628, 0.00000000, 0.00000000),
        (0.95784112, 0.00000000, 0.00000000),
        (0.96813596, 0.00000000, 0.00000000),
        (0.97843081, 0.00000000, 0.00000000),
        (0.98872565, 0.00000000, 0.00000000),
        (0.99902050, 0.00000000, 0.00000000),
        (1.00000000, 0.00931467, 0.00000000),
        (1.00000000, 0.01960877, 0.00000000),
        (1.00000000, 0.02990287, 0.00000000),
        (1.00000000, 0.04019697, 0.00000000),
        (1.00000000, 0.05049107, 0.00000000),
        (1.00000000, 0.06078517, 0.00000000),
        (1.00000000, 0.07107927, 0.00000000),
        (1.00000000, 0.08137338, 0.00000000),
        (1.00000000, 0.09166748, 0.00000000),
        (1.00000000, 0.10196158, 0.00000000),
        (1.00000000, 0.11225568, 0.00000000),
        (1.00000000, 0.12254978, 0.00000000),
        (1.00000000, 0.13284388, 0.00000000),
        (1.00000000, 0.14313798, 0.00000000),
        (1.00000000, 0.15343208, 0.00000000),
        (1.00000000, 0.16372618, 0.00000000),
        (1.00000000, 0.17402028, 0.00000000),
        (1.00000000, 0.18431438, 0.00000000),
        (1.00000000, 0.19460849, 0.00000000),
        (1.00000000, 0.20490259, 0.00000000),
        (1.00000000, 0.21519669, 0.00000000),
        (1.00000000, 0.22549079, 0.00000000),
        (1.00000000, 0.23578489, 0.00000000),
        (1.00000000, 0.24607899, 0.00000000),
        (1.00000000, 0.25637309, 0.00000000),
        (1.00000000, 0.26666719, 0.00000000),
        (1.00000000, 0.27696129, 0.00000000),
        (1.00000000, 0.28725539, 0.00000000),
        (1.00000000, 0.29754949, 0.00000000),
        (1.00000000, 0.30784360, 0.00000000),
        (1.00000000, 0.31813770, 0.00000000),
        (1.00000000, 0.32843180, 0.00000000),
        (1.00000000, 0.33872590, 0.00000000),
        (1.00000000, 0.34902000, 0.00000000),
        (1.00000000, 0.35931410, 0.00000000),
        (1.00000000, 0.36960820, 0.00000000),
        (1.00000000, 0.37990230, 0.00000000),
        (1.00000000, 0.39019640, 0.00000000),
        (1.00000000, 0.40049050, 0.00000000),
        (1.00000000, 0.41078460, 0.00000000),
        (1.00000000, 0.42107871, 0.00000000),
        (1.00000000, 0.43137281, 0.00000000),
        (1.00000000, 0.44166691, 0.00000000),
        (1.00000000, 0.45196101, 0.00000000),
        (1.00000000, 0.46225511, 0.00000000),
        (1.00000000, 0.47254921, 0.00000000),
        (1.00000000, 0.48284331, 0.00000000),
        (1.00000000, 0.49313741, 0.00000000),
        (1.00000000, 0.50343151, 0.00000000),
        (1.00000000, 0.51372561, 0.00000000),
        (1.00000000, 0.52401971, 0.00000000),
        (1.00000000, 0.53431382, 0.00000000),
        (1.00000000, 0.54460792, 0.00000000),
        (1.00000000, 0.55490202, 0.00000000),
        (1.00000000, 0.56519612, 0.00000000),
        (1.00000000, 0.57549022, 0.00000000),
        (1.00000000, 0.58578432, 0.00000000),
        (1.00000000, 0.59607842, 0.00000000),
        (1.00000000, 0.60637252, 0.00000000),
        (1.00000000, 0.61666662, 0.00000000),
        (1.00000000, 0.62696072, 0.00000000),
        (1.00000000, 0.63725482, 0.00000000),
        (1.00000000, 0.64754893, 0.00000000),
        (1.00000000, 0.65784303, 0.00000000),
        (1.00000000, 0.66813713, 0.00000000),
        (1.00000000, 0.67843123, 0.00000000),
        (1.00000000, 0.68872533, 0.00000000),
        (1.00000000, 0.69901943, 0.00000000),
        (1.00000000, 0.70931353, 0.00000000),
        (1.00000000, 0.71960763, 0.00000000),
        (1.00000000, 0.72990173, 0.00000000),
        (1.00000000, 0.74019583, 0.00000000),
        (1.00000000, 0.75048993, 0.00000000),
        (1.00000000, 0.76078404, 0.00000000),
        (1.00000000, 0.77107814, 0.00000000),
        (1.00000000, 0.78137224, 0.00000000),
        (1.00000000, 0.79166634, 0.00000000),
        (1.00000000, 0.80196044, 0.00000000),
        (1.00000000, 0.81225454, 0.00000000),
        (1.00000000, 0.82254864, 0.00000000),
        (1.00000000, 0.83284274, 0.00000000),
        (1.00000000, 0.84313684, 0.00000000),
        (1.00000000, 0.85343094, 0.00000000),
        (1.00000000, 0.86372504, 0.00000000),
        (1.00000000, 0.87401915, 0.00000000),
        (1.00000000, 0.88431325, 0.00000000),
        (1.00000000, 0.89460735, 0.00000000),
        (1.00000000, 0.90490145, 0.00000000),
        (1.00000000, 0.91519555, 0.00000000),
        (1.00000000, 0.92548965, 0.00000000),
        (1.00000000, 0.93578375, 0.00000000),
        (1.00000000, 0.94607785, 0.00000000),
        (1.00000000, 0.95637195, 0.00000000),
        (1.00000000, 0.96666605, 0.00000000),
        (1.00000000, 0.97696016, 0.00000000),
        (1.00000000, 0.98725426, 0.00000000),
        (1.00000000, 0.99754836, 0.00000000),
        (1.00000000, 1.00000000, 0.01176372),
        (1.00000000, 1.00000000, 0.02720491),
        (1.00000000, 1.00000000, 0.04264610),
        (1.00000000, 1.00000000, 0.05808729),
        (1.00000000, 1.00000000, 0.07352849),
        (1.00000000, 1.00000000, 0.08896968),
        (1.00000000, 1.00000000, 0.10441087),
        (1.00000000, 1.00000000, 0.11985206),
        (1.00000000, 1.00000000, 0.13529325),
        (1.00000000, 1.00000000, 0.15073444),
        (1.00000000, 1.00000000, 0.16617564),
        (1.00000000, 1.00000000, 0.18161683),
        (1.00000000, 1.00000000, 0.19705802),
        (1.00000000, 1.00000000, 0.21249921),
        (1.00000000, 1.00000000, 0.22794040),
        (1.00000000, 1.00000000, 0.24338160),
        (1.00000000, 1.00000000, 0.25882279),
        (1.00000000, 1.00000000, 0.27426398),
        (1.00000000, 1.00000000, 0.28970517),
        (1.00000000, 1.00000000, 0.30514636),
        (1.00000000, 1.00000000, 0.32058756),
        (1.00000000, 1.00000000, 0.33602875),
        (1.00000000, 1.00000000, 0.35146994),
        (1.00000000, 1.00000000, 0.36691113),
        (1.00000000, 1.00000000, 0.38235232),
        (1.00000000, 1.00000000, 0.39779352),
        (1.00000000, 1.00000000, 0.41323471),
        (1.00000000, 1.00000000, 0.42867590),
        (1.00000000, 1.00000000, 0.44411709),
        (1.00000000, 1.00000000, 0.45955828),
        (1.00000000, 1.00000000, 0.47499947),
        (1.00000000, 1.00000000, 0.49044067),
        (1.00000000, 1.00000000, 0.50588186),
        (1.00000000, 1.00000000, 0.52132305),
        (1.00000000, 1.00000000, 0.53676424),
        (1.00000000, 1.00000000, 0.55220543),
        (1.00000000, 1.00000000, 0.56764663),
        (1.00000000, 1.00000000, 0.58308782),
        (1.00000000, 1.00000000, 0.59852901),
        (1.00000000, 1.00000000, 0.61397020),
        (1.00000000, 1.00000000, 0.62941139),
        (1.00000000, 1.00000000, 0.64485259),
        (1.00000000, 1.00000000, 0.66029378),
        (1.00000000, 1.00000000, 0.67573497),
        (1.00000000, 1.00000000, 0.69117616),
        (1.00000000, 1.00000000, 0.70661735),
        (1.00000000, 1.00000000, 0.72205855),
        (1.00000000, 1.00000000, 0.73749974),
        (1.00000000, 1.00000000, 0.75294093),
        (1.00000000, 1.00000000, 0.76838212),
        (1.00000000, 1.00000000, 0.78382331),
        (1.00000000, 1.00000000, 0.79926451),
        (1.00000000, 1.00000000, 0.81470570),
        (1.00000000, 1.00000000, 0.83014689),
        (1.00000000, 1.00000000, 0.84558808),
        (1.00000000, 1.00000000, 0.86102927),
        (1.00000000, 1.00000000, 0.87647046),
        (1.00000000, 1.00000000, 0.89191166),
        (1.00000000, 1.00000000, 0.90735285),
        (1.00000000, 1.00000000, 0.92279404),
        (1.00000000, 1.00000000, 0.93823523),
        (1.00000000, 1.00000000, 0.95367642),
        (1.00000000, 1.00000000, 0.96911762),
        (1.00000000, 1.00000000, 0.98455881),
        (1.00000000, 1.00000000, 1.00000000),
    ),
}
