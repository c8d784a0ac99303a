//! Fresnel integrals C(x), S(x) on x = 0, 0.1, ..., 10 from a 160-digit power series.

#[allow(clippy::excessive_precision)]
pub const FRESNEL_TABLE: [(f64, f64, f64); 101] = [
    (0.0, 0.0, 0.0),
    (0.1, 9.99975326270850681e-2, 5.23589547612210599e-4),
    (0.2, 1.99921057594453085e-1, 4.18760916165676163e-3),
    (0.3, 2.9940097605204721e-1, 1.41169980065765858e-2),
    (0.4, 3.9748075917235944e-1, 3.33594326606131804e-2),
    (0.5, 4.92344225871446393e-1, 6.47324328599992776e-2),
    (0.6, 5.81095446991652327e-1, 1.10540207359386961e-1),
    (0.7, 6.59652351904510391e-1, 1.72136457863477453e-1),
    (0.8, 7.22844171896356118e-1, 2.49341393053917784e-1),
    (0.9, 7.648230212733265e-1, 3.39776344393140215e-1),
    (1.0, 7.79893400376822829e-1, 4.38259147390354766e-1),
    (1.1, 7.63806666062011991e-1, 5.36497911096820435e-1),
    (1.2, 7.15437722923073396e-1, 6.23400918546249672e-1),
    (1.3, 6.38550454727029257e-1, 6.86333285534650114e-1),
    (1.4, 5.43095783546256389e-1, 7.13525077363412113e-1),
    (1.5, 4.45261176039821535e-1, 6.97504960082093013e-1),
    (1.6, 3.6546168344048771e-1, 6.38887683509380903e-1),
    (1.7, 3.23826876003900254e-1, 5.49195940321568501e-1),
    (1.8, 3.33632927221557101e-1, 4.50938769267583101e-1),
    (1.9, 3.94470534891522948e-1, 3.73347317816981144e-1),
    (2.0, 4.88253406075340755e-1, 3.43415678363698242e-1),
    (2.1, 5.81564135060833914e-1, 3.74273359378103696e-1),
    (2.2, 6.36286044903319458e-1, 4.55704612124656893e-1),
    (2.3, 6.26561709791952101e-1, 5.53151641560702123e-1),
    (2.4, 5.54961405856428128e-1, 6.19689964945683583e-1),
    (2.5, 4.57413009641777045e-1, 6.19181755819592936e-1),
    (2.6, 3.88937496191969028e-1, 5.49989323152719469e-1),
    (2.7, 3.92493969852747945e-1, 4.52917487616719208e-1),
    (2.8, 4.67491651698905979e-1, 3.91528443543171819e-1),
    (2.9, 5.62376450225823956e-1, 4.10140587056713657e-1),
    (3.0, 6.0572078929768563e-1, 4.96312998967375036e-1),
    (3.1, 5.6159390251135641e-1, 5.81815868085874467e-1),
    (3.2, 4.6632034695203745e-1, 5.93349464618603495e-1),
    (3.3, 4.05694403706258442e-1, 5.19286084982062909e-1),
    (3.4, 4.38491703363802948e-1, 4.29649464443926864e-1),
    (3.5, 5.32572435028000845e-1, 4.15248011972437524e-1),
    (3.6, 5.87953259673415593e-1, 4.92309489111001503e-1),
    (3.7, 5.4194566215448757e-1, 5.74980349887472823e-1),
    (3.8, 4.48094947012819545e-1, 5.65618739795132688e-1),
    (3.9, 4.22332710260933334e-1, 4.7520240235068857e-1),
    (4.0, 4.98426033038177616e-1, 4.20515754246928424e-1),
    (4.1, 5.73695631451205342e-1, 4.75798257032828314e-1),
    (4.2, 5.41719203163415282e-1, 5.63198888396611303e-1),
    (4.3, 4.49441171024909022e-1, 5.53995887666577798e-1),
    (4.4, 4.38332940837678939e-1, 4.62268016411044804e-1),
    (4.5, 5.26025915053538741e-1, 4.34272975048703589e-1),
    (4.6, 5.67236682285747622e-1, 5.16192336949054949e-1),
    (4.7, 4.91426490601025714e-1, 5.67145469012263005e-1),
    (4.8, 4.33796581622996036e-1, 4.96750218958946911e-1),
    (4.9, 5.00160967512303113e-1, 4.35067361787493698e-1),
    (5.0, 5.63631188704012231e-1, 4.99191381917116887e-1),
    (5.1, 4.99782109976894181e-1, 5.62390079733005789e-1),
    (5.2, 4.38887474227742317e-1, 4.968756558601043e-1),
    (5.3, 5.07786574155269434e-1, 4.40467788604097798e-1),
    (5.4, 5.57233781017890913e-1, 5.14031988701914827e-1),
    (5.5, 4.78421414925314454e-1, 5.53684062779021673e-1),
    (5.6, 4.51713624601016192e-1, 4.70038806514861022e-1),
    (5.7, 5.3845895660668921e-1, 4.59528382647677397e-1),
    (5.8, 5.298367159752287e-1, 5.4604728378953286e-1),
    (5.9, 4.48591953169830103e-1, 5.16330691504153766e-1),
    (6.0, 4.9953146785550112e-1, 4.46960761236930278e-1),
    (6.1, 5.49502201263965312e-1, 5.16477082795104011e-1),
    (6.2, 4.67608409763525143e-1, 5.39820978816940684e-1),
    (6.3, 4.76004455353068089e-1, 4.55545430504398413e-1),
    (6.4, 5.49604555703824277e-1, 4.96492221545942401e-1),
    (6.5, 4.81603459890964035e-1, 5.4537645524323358e-1),
    (6.6, 4.68991407711793916e-1, 4.63069501140455224e-1),
    (6.7, 5.46736574851369725e-1, 4.91501446345086065e-1),
    (6.8, 4.83069828033669343e-1, 5.43635456823505556e-1),
    (6.9, 4.7322531435151363e-1, 4.62439507778596195e-1),
    (7.0, 5.4546709254696981e-1, 4.99704789453446776e-1),
    (7.1, 4.73311196696590583e-1, 5.36017354510779275e-1),
    (7.2, 4.88743953651618964e-1, 4.57251530582879904e-1),
    (7.3, 5.39268015658462404e-1, 5.1894732785814445e-1),
    (7.4, 4.60101852079480517e-1, 5.16065580377602542e-1),
    (7.5, 5.16018250152336346e-1, 4.60701232946830611e-1),
    (7.6, 5.15631219651509216e-1, 5.38853243389632262e-1),
    (7.7, 4.62782096822632387e-1, 4.82014168075985066e-1),
    (7.8, 5.39470552655203185e-1, 4.89645340429778627e-1),
    (7.9, 4.75973793848412038e-1, 5.32342034747771962e-1),
    (8.0, 4.99802180377197136e-1, 4.60214214393014484e-1),
    (8.1, 5.22750612557856082e-1, 5.3203939564156135e-1),
    (8.2, 4.63842476689327203e-1, 4.8588179985713524e-1),
    (8.3, 5.37746648418661522e-1, 4.93232333330852093e-1),
    (8.4, 4.70912858992913551e-1, 5.24284769779928631e-1),
    (8.5, 5.14177598583733447e-1, 4.65341248981074507e-1),
    (8.6, 5.0248286002240201e-1, 5.36927690345083613e-1),
    (8.7, 4.82744653672090554e-1, 4.67739057456668755e-1),
    (8.8, 5.27964016151212307e-1, 5.22940932758777714e-1),
    (8.9, 4.66118204596100089e-1, 4.88551546582345895e-1),
    (9.0, 5.35366127468119853e-1, 4.9986104562968493e-1),
    (9.1, 4.66608220079834573e-1, 5.10413295169680708e-1),
    (9.2, 5.29141873314556028e-1, 4.81351929338446457e-1),
    (9.3, 4.7627249167238257e-1, 5.24665859952818795e-1),
    (9.4, 5.18040887032096239e-1, 4.71344492246875961e-1),
    (9.5, 4.87287331026567164e-1, 5.30999849151398295e-1),
    (9.6, 5.08134681552783627e-1, 4.67857090761817451e-1),
    (9.7, 4.95486310531390662e-1, 5.32502598564265404e-1),
    (9.8, 5.01931984740019236e-1, 4.67577801869664397e-1),
    (9.9, 4.99599379488717676e-1, 5.32149170211790849e-1),
    (10.0, 4.99898694205515724e-1, 4.6816997858488224e-1),
];
