// Embedded bitmap font tables; same content as data/fonts/*.json.
// Derived from the DejaVu typefaces (see data/fonts/LICENSE_DEJAVU).

namespace actsynth {
namespace font_data {

const char* kMono16Json = R"__FONT__({"name":"deja-mono-16","cell_height":16,"baseline":13,"glyphs":{"32":{"advance":8,"rows":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]},"33":{"advance":8,"rows":[0,0,0,0,24,24,24,24,24,8,0,24,24,0,0,0]},"34":{"advance":8,"rows":[0,0,0,0,36,36,36,36,0,0,0,0,0,0,0,0]},"35":{"advance":8,"rows":[0,0,0,72,72,40,254,36,36,127,20,18,18,0,0,0]},"36":{"advance":8,"rows":[0,0,0,0,0,60,6,2,28,48,64,66,60,0,0,0]},"37":{"advance":8,"rows":[0,0,0,0,6,9,9,102,24,114,208,208,112,0,0,0]},"38":{"advance":8,"rows":[0,0,0,0,60,4,4,12,138,19,99,98,92,0,0,0]},"39":{"advance":8,"rows":[0,0,0,0,8,8,8,8,0,0,0,0,0,0,0,0]},"40":{"advance":8,"rows":[0,0,16,16,24,8,8,8,8,8,8,24,16,16,0,0]},"41":{"advance":8,"rows":[0,0,4,8,8,16,16,16,16,16,16,8,8,4,0,0]},"42":{"advance":8,"rows":[0,0,0,0,0,2,28,28,2,0,0,0,0,0,0,0]},"43":{"advance":8,"rows":[0,0,0,0,0,8,8,8,126,8,8,8,0,0,0,0]},"44":{"advance":8,"rows":[0,0,0,0,0,0,0,0,0,0,0,24,24,8,8,0]},"45":{"advance":8,"rows":[0,0,0,0,0,0,0,0,0,60,0,0,0,0,0,0]},"46":{"advance":8,"rows":[0,0,0,0,0,0,0,0,0,0,0,24,24,0,0,0]},"47":{"advance":8,"rows":[0,0,0,0,96,32,32,16,16,8,8,4,4,6,2,0]},"48":{"advance":8,"rows":[0,0,0,0,60,38,98,66,90,66,98,38,60,0,0,0]},"49":{"advance":8,"rows":[0,0,0,0,28,16,16,16,16,16,16,16,124,0,0,0]},"50":{"advance":8,"rows":[0,0,0,0,28,34,96,32,48,24,12,6,126,0,0,0]},"51":{"advance":8,"rows":[0,0,0,0,28,34,96,32,60,32,64,98,60,0,0,0]},"52":{"advance":8,"rows":[0,0,0,0,48,56,40,36,36,34,126,32,32,0,0,0]},"53":{"advance":8,"rows":[0,0,0,0,62,2,2,30,32,96,96,34,28,0,0,0]},"54":{"advance":8,"rows":[0,0,0,0,56,4,2,58,102,66,66,102,60,0,0,0]},"55":{"advance":8,"rows":[0,0,0,0,126,32,32,48,16,16,8,8,12,0,0,0]},"56":{"advance":8,"rows":[0,0,0,0,60,102,98,38,60,102,66,102,60,0,0,0]},"57":{"advance":8,"rows":[0,0,0,0,60,38,98,98,102,124,96,32,28,0,0,0]},"58":{"advance":8,"rows":[0,0,0,0,0,0,24,24,0,0,0,24,24,0,0,0]},"59":{"advance":8,"rows":[0,0,0,0,0,0,24,24,0,0,0,24,24,8,8,0]},"60":{"advance":8,"rows":[0,0,0,0,0,0,64,56,6,6,56,64,0,0,0,0]},"61":{"advance":8,"rows":[0,0,0,0,0,0,0,126,0,0,126,0,0,0,0,0]},"62":{"advance":8,"rows":[0,0,0,0,0,0,2,28,96,96,28,2,0,0,0,0]},"63":{"advance":8,"rows":[0,0,0,0,60,32,32,48,24,8,0,8,8,0,0,0]},"64":{"advance":8,"rows":[0,0,0,0,56,70,66,113,73,9,73,113,2,4,56,0]},"65":{"advance":8,"rows":[0,0,0,0,24,24,28,36,36,38,126,66,67,0,0,0]},"66":{"advance":8,"rows":[0,0,0,0,62,98,66,98,62,98,66,98,62,0,0,0]},"67":{"advance":8,"rows":[0,0,0,0,56,68,6,2,2,2,6,68,56,0,0,0]},"68":{"advance":8,"rows":[0,0,0,0,30,34,98,66,66,66,98,34,30,0,0,0]},"69":{"advance":8,"rows":[0,0,0,0,126,6,6,6,126,6,6,6,126,0,0,0]},"70":{"advance":8,"rows":[0,0,0,0,126,6,6,6,126,6,6,6,6,0,0,0]},"71":{"advance":8,"rows":[0,0,0,0,56,6,2,2,114,66,66,70,60,0,0,0]},"72":{"advance":8,"rows":[0,0,0,0,66,66,66,66,126,66,66,66,66,0,0,0]},"73":{"advance":8,"rows":[0,0,0,0,126,24,24,24,24,24,24,24,126,0,0,0]},"74":{"advance":8,"rows":[0,0,0,0,60,32,32,32,32,32,32,50,30,0,0,0]},"75":{"advance":8,"rows":[0,0,0,0,66,34,18,14,30,18,34,98,66,0,0,0]},"76":{"advance":8,"rows":[0,0,0,0,6,6,6,6,6,6,6,6,126,0,0,0]},"77":{"advance":8,"rows":[0,0,0,0,98,102,102,82,90,90,66,66,66,0,0,0]},"78":{"advance":8,"rows":[0,0,0,0,70,70,78,74,74,82,114,98,98,0,0,0]},"79":{"advance":8,"rows":[0,0,0,0,60,38,66,66,66,66,66,38,60,0,0,0]},"80":{"advance":8,"rows":[0,0,0,0,62,102,70,70,102,62,6,6,6,0,0,0]},"81":{"advance":8,"rows":[0,0,0,0,60,38,66,66,66,66,66,38,60,32,32,0]},"82":{"advance":8,"rows":[0,0,0,0,62,98,98,34,30,34,98,66,194,0,0,0]},"83":{"advance":8,"rows":[0,0,0,0,60,6,2,6,60,96,64,98,60,0,0,0]},"84":{"advance":8,"rows":[0,0,0,0,255,24,24,24,24,24,24,24,24,0,0,0]},"85":{"advance":8,"rows":[0,0,0,0,66,66,66,66,66,66,66,102,60,0,0,0]},"86":{"advance":8,"rows":[0,0,0,0,66,66,98,38,36,36,20,24,24,0,0,0]},"87":{"advance":8,"rows":[0,0,0,0,129,193,67,90,90,90,102,102,38,0,0,0]},"88":{"advance":8,"rows":[0,0,0,0,66,36,36,24,24,28,36,98,67,0,0,0]},"89":{"advance":8,"rows":[0,0,0,0,66,98,36,28,24,24,24,24,24,0,0,0]},"90":{"advance":8,"rows":[0,0,0,0,126,96,32,16,24,8,4,6,126,0,0,0]},"91":{"advance":8,"rows":[0,0,56,8,8,8,8,8,8,8,8,8,8,56,0,0]},"92":{"advance":8,"rows":[0,0,0,0,2,6,4,4,8,8,16,16,32,32,96,0]},"93":{"advance":8,"rows":[0,0,28,16,16,16,16,16,16,16,16,16,16,28,0,0]},"94":{"advance":8,"rows":[0,0,0,0,24,60,36,66,0,0,0,0,0,0,0,0]},"95":{"advance":8,"rows":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,255]},"96":{"advance":8,"rows":[0,0,0,4,8,0,0,0,0,0,0,0,0,0,0,0]},"97":{"advance":8,"rows":[0,0,0,0,0,0,60,34,64,124,98,98,124,0,0,0]},"98":{"advance":8,"rows":[0,0,2,2,2,2,62,102,70,66,70,102,62,0,0,0]},"99":{"advance":8,"rows":[0,0,0,0,0,0,56,4,6,6,6,4,56,0,0,0]},"100":{"advance":8,"rows":[0,0,96,96,96,96,124,102,98,98,98,102,124,0,0,0]},"101":{"advance":8,"rows":[0,0,0,0,0,0,60,102,66,126,2,70,60,0,0,0]},"102":{"advance":8,"rows":[0,0,112,24,8,8,126,8,8,8,8,8,8,0,0,0]},"103":{"advance":8,"rows":[0,0,0,0,0,0,124,102,98,98,98,102,124,32,32,28]},"104":{"advance":8,"rows":[0,0,2,2,2,2,62,38,98,98,98,98,98,0,0,0]},"105":{"advance":8,"rows":[0,0,24,0,0,0,28,24,24,24,24,24,126,0,0,0]},"106":{"advance":8,"rows":[0,0,16,0,0,0,28,16,16,16,16,16,16,16,24,14]},"107":{"advance":8,"rows":[0,0,6,6,6,6,102,54,30,30,54,102,70,0,0,0]},"108":{"advance":8,"rows":[0,0,14,8,8,8,8,8,8,8,8,8,112,0,0,0]},"109":{"advance":8,"rows":[0,0,0,0,0,0,110,90,74,74,74,74,74,0,0,0]},"110":{"advance":8,"rows":[0,0,0,0,0,0,62,38,98,98,98,98,98,0,0,0]},"111":{"advance":8,"rows":[0,0,0,0,0,0,60,38,66,66,66,38,60,0,0,0]},"112":{"advance":8,"rows":[0,0,0,0,0,0,62,102,70,66,70,102,62,2,2,2]},"113":{"advance":8,"rows":[0,0,0,0,0,0,124,102,98,98,98,102,124,64,64,64]},"114":{"advance":8,"rows":[0,0,0,0,0,0,124,12,12,4,4,4,4,0,0,0]},"115":{"advance":8,"rows":[0,0,0,0,0,0,28,38,6,60,32,34,60,0,0,0]},"116":{"advance":8,"rows":[0,0,0,0,8,8,126,8,8,8,8,8,120,0,0,0]},"117":{"advance":8,"rows":[0,0,0,0,0,0,98,98,98,98,98,102,124,0,0,0]},"118":{"advance":8,"rows":[0,0,0,0,0,0,66,98,36,36,52,24,24,0,0,0]},"119":{"advance":8,"rows":[0,0,0,0,0,0,129,65,90,90,90,102,36,0,0,0]},"120":{"advance":8,"rows":[0,0,0,0,0,0,98,36,24,24,28,36,66,0,0,0]},"121":{"advance":8,"rows":[0,0,0,0,0,0,66,66,36,36,60,24,24,8,8,6]},"122":{"advance":8,"rows":[0,0,0,0,0,0,126,32,16,24,12,4,126,0,0,0]},"123":{"advance":8,"rows":[0,0,48,24,24,24,8,14,8,24,24,24,24,48,0,0]},"124":{"advance":8,"rows":[0,0,8,8,8,8,8,8,8,8,8,8,8,8,8,0]},"125":{"advance":8,"rows":[0,0,14,8,8,8,24,48,24,24,8,8,8,14,0,0]},"126":{"advance":8,"rows":[0,0,0,0,0,0,0,0,14,112,0,0,0,0,0,0]}}})__FONT__";

const char* kSans16Json = R"__FONT__({"name":"deja-sans-16","cell_height":16,"baseline":13,"glyphs":{"32":{"advance":4,"rows":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]},"33":{"advance":5,"rows":[0,0,0,0,4,4,4,4,4,4,0,4,4,0,0,0]},"34":{"advance":6,"rows":[0,0,0,0,18,18,18,18,0,0,0,0,0,0,0,0]},"35":{"advance":11,"rows":[0,0,0,160,144,144,1020,144,72,510,72,72,36,0,0,0]},"36":{"advance":8,"rows":[0,0,0,0,0,60,6,2,28,112,64,66,60,0,0,0]},"37":{"advance":12,"rows":[0,0,0,0,268,274,146,82,1868,1440,2192,1424,1800,0,0,0]},"38":{"advance":10,"rows":[0,0,0,0,56,4,4,12,278,290,194,198,316,0,0,0]},"39":{"advance":4,"rows":[0,0,0,0,2,2,2,2,0,0,0,0,0,0,0,0]},"40":{"advance":5,"rows":[0,0,8,4,4,6,2,2,2,2,6,4,4,8,0,0]},"41":{"advance":5,"rows":[0,0,2,4,4,12,8,8,8,8,12,4,4,2,0,0]},"42":{"advance":6,"rows":[0,0,0,0,8,42,28,28,42,8,0,0,0,0,0,0]},"43":{"advance":11,"rows":[0,0,0,0,32,32,32,32,1022,32,32,32,32,0,0,0]},"44":{"advance":4,"rows":[0,0,0,0,0,0,0,0,0,0,0,4,6,2,0,0]},"45":{"advance":5,"rows":[0,0,0,0,0,0,0,0,0,14,0,0,0,0,0,0]},"46":{"advance":4,"rows":[0,0,0,0,0,0,0,0,0,0,0,6,6,0,0,0]},"47":{"advance":4,"rows":[0,0,0,0,8,8,8,4,4,4,2,2,2,3,1,0]},"48":{"advance":8,"rows":[0,0,0,0,60,100,66,66,66,66,66,100,60,0,0,0]},"49":{"advance":8,"rows":[0,0,0,0,30,16,16,16,16,16,16,16,124,0,0,0]},"50":{"advance":8,"rows":[0,0,0,0,60,98,64,96,32,16,8,6,126,0,0,0]},"51":{"advance":8,"rows":[0,0,0,0,60,98,64,96,56,96,64,98,60,0,0,0]},"52":{"advance":8,"rows":[0,0,0,0,48,48,40,36,36,34,254,32,32,0,0,0]},"53":{"advance":8,"rows":[0,0,0,0,62,6,6,62,96,64,64,98,60,0,0,0]},"54":{"advance":8,"rows":[0,0,0,0,56,68,6,58,70,70,70,68,56,0,0,0]},"55":{"advance":8,"rows":[0,0,0,0,126,96,32,32,48,16,24,8,8,0,0,0]},"56":{"advance":8,"rows":[0,0,0,0,60,102,66,102,60,70,66,70,60,0,0,0]},"57":{"advance":8,"rows":[0,0,0,0,60,102,66,66,102,92,64,32,28,0,0,0]},"58":{"advance":4,"rows":[0,0,0,0,0,0,4,4,0,0,0,4,4,0,0,0]},"59":{"advance":4,"rows":[0,0,0,0,0,0,4,4,0,0,0,4,6,2,0,0]},"60":{"advance":11,"rows":[0,0,0,0,0,256,480,56,14,56,480,256,0,0,0,0]},"61":{"advance":11,"rows":[0,0,0,0,0,0,0,1022,0,0,1022,0,0,0,0,0]},"62":{"advance":11,"rows":[0,0,0,0,0,6,28,224,896,224,28,6,0,0,0,0]},"63":{"advance":7,"rows":[0,0,0,0,28,50,32,16,8,8,0,12,12,0,0,0]},"64":{"advance":13,"rows":[0,0,0,0,496,1560,1028,2530,2322,2322,3346,994,4,520,496,0]},"65":{"advance":9,"rows":[0,0,0,0,16,56,40,68,68,124,130,130,387,0,0,0]},"66":{"advance":9,"rows":[0,0,0,0,126,70,198,70,126,198,134,198,126,0,0,0]},"67":{"advance":9,"rows":[0,0,0,0,120,140,6,2,2,2,6,140,120,0,0,0]},"68":{"advance":10,"rows":[0,0,0,0,126,198,390,262,262,262,390,198,126,0,0,0]},"69":{"advance":8,"rows":[0,0,0,0,126,6,6,6,126,6,6,6,126,0,0,0]},"70":{"advance":7,"rows":[0,0,0,0,126,6,6,6,62,6,6,6,6,0,0,0]},"71":{"advance":10,"rows":[0,0,0,0,248,268,6,2,450,258,262,396,248,0,0,0]},"72":{"advance":10,"rows":[0,0,0,0,390,390,390,390,510,390,390,390,390,0,0,0]},"73":{"advance":4,"rows":[0,0,0,0,6,6,6,6,6,6,6,6,6,0,0,0]},"74":{"advance":4,"rows":[0,0,0,0,6,6,6,6,6,6,6,6,6,2,2,3]},"75":{"advance":9,"rows":[0,0,0,0,198,102,54,30,14,30,54,70,134,0,0,0]},"76":{"advance":7,"rows":[0,0,0,0,6,6,6,6,6,6,6,6,126,0,0,0]},"77":{"advance":11,"rows":[0,0,0,0,774,910,654,662,598,630,550,518,518,0,0,0]},"78":{"advance":10,"rows":[0,0,0,0,134,142,142,150,182,166,230,198,198,0,0,0]},"79":{"advance":10,"rows":[0,0,0,0,120,140,262,258,258,258,262,396,120,0,0,0]},"80":{"advance":8,"rows":[0,0,0,0,62,102,70,70,102,62,6,6,6,0,0,0]},"81":{"advance":10,"rows":[0,0,0,0,120,396,262,258,258,258,262,140,120,192,128,0]},"82":{"advance":9,"rows":[0,0,0,0,62,70,70,70,62,102,70,134,134,0,0,0]},"83":{"advance":8,"rows":[0,0,0,0,60,70,2,6,60,64,64,66,60,0,0,0]},"84":{"advance":8,"rows":[0,0,0,0,255,24,24,24,24,24,24,24,24,0,0,0]},"85":{"advance":10,"rows":[0,0,0,0,130,130,130,130,130,130,134,196,120,0,0,0]},"86":{"advance":9,"rows":[0,0,0,0,387,130,194,68,68,108,40,56,16,0,0,0]},"87":{"advance":13,"rows":[0,0,0,0,2114,2274,3234,1190,1188,1300,1812,796,792,0,0,0]},"88":{"advance":9,"rows":[0,0,0,0,134,68,40,56,16,56,108,70,130,0,0,0]},"89":{"advance":8,"rows":[0,0,0,0,195,66,36,28,24,24,24,24,24,0,0,0]},"90":{"advance":9,"rows":[0,0,0,0,254,192,96,48,16,8,4,6,254,0,0,0]},"91":{"advance":5,"rows":[0,0,0,14,2,2,2,2,2,2,2,2,2,2,14,0]},"92":{"advance":4,"rows":[0,0,0,0,1,3,2,2,2,4,4,4,8,8,8,0]},"93":{"advance":5,"rows":[0,0,0,14,8,8,8,8,8,8,8,8,8,8,14,0]},"94":{"advance":11,"rows":[0,0,0,0,48,80,136,260,0,0,0,0,0,0,0,0]},"95":{"advance":6,"rows":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,127]},"96":{"advance":6,"rows":[0,0,0,4,8,0,0,0,0,0,0,0,0,0,0,0]},"97":{"advance":8,"rows":[0,0,0,0,0,0,30,32,64,124,66,98,124,0,0,0]},"98":{"advance":8,"rows":[0,0,2,2,2,2,62,70,70,194,70,70,62,0,0,0]},"99":{"advance":7,"rows":[0,0,0,0,0,0,60,6,2,2,2,6,60,0,0,0]},"100":{"advance":8,"rows":[0,0,64,64,64,64,92,102,66,66,66,102,92,0,0,0]},"101":{"advance":8,"rows":[0,0,0,0,0,0,60,102,66,126,2,70,60,0,0,0]},"102":{"advance":5,"rows":[0,0,28,4,6,6,31,6,6,6,6,6,6,0,0,0]},"103":{"advance":8,"rows":[0,0,0,0,0,0,92,102,66,66,66,102,92,64,96,60]},"104":{"advance":8,"rows":[0,0,2,2,2,2,62,70,66,66,66,66,66,0,0,0]},"105":{"advance":4,"rows":[0,0,0,2,0,0,2,2,2,2,2,2,2,0,0,0]},"106":{"advance":4,"rows":[0,0,0,2,0,0,2,2,2,2,2,2,2,2,2,3]},"107":{"advance":8,"rows":[0,0,2,2,2,2,98,50,14,14,26,50,98,0,0,0]},"108":{"advance":4,"rows":[0,0,2,2,2,2,2,2,2,2,2,2,2,0,0,0]},"109":{"advance":13,"rows":[0,0,0,0,0,0,1854,1254,3138,3138,3138,3138,3138,0,0,0]},"110":{"advance":8,"rows":[0,0,0,0,0,0,62,70,66,66,66,66,66,0,0,0]},"111":{"advance":8,"rows":[0,0,0,0,0,0,60,102,66,66,66,102,60,0,0,0]},"112":{"advance":8,"rows":[0,0,0,0,0,0,62,70,70,194,70,70,62,2,2,2]},"113":{"advance":8,"rows":[0,0,0,0,0,0,92,102,66,66,66,102,92,64,64,64]},"114":{"advance":5,"rows":[0,0,0,0,0,0,30,6,2,2,2,2,2,0,0,0]},"115":{"advance":7,"rows":[0,0,0,0,0,0,28,34,2,28,32,34,28,0,0,0]},"116":{"advance":5,"rows":[0,0,0,0,2,2,31,2,2,2,2,6,28,0,0,0]},"117":{"advance":8,"rows":[0,0,0,0,0,0,66,66,66,66,66,102,92,0,0,0]},"118":{"advance":8,"rows":[0,0,0,0,0,0,66,98,38,36,52,28,24,0,0,0]},"119":{"advance":11,"rows":[0,0,0,0,0,0,562,562,338,342,332,460,140,0,0,0]},"120":{"advance":8,"rows":[0,0,0,0,0,0,98,36,28,24,28,36,66,0,0,0]},"121":{"advance":8,"rows":[0,0,0,0,0,0,66,98,38,36,52,24,24,8,8,6]},"122":{"advance":7,"rows":[0,0,0,0,0,0,62,32,16,8,4,2,62,0,0,0]},"123":{"advance":8,"rows":[0,0,0,112,16,16,16,24,12,24,16,16,16,16,112,0]},"124":{"advance":4,"rows":[0,0,0,4,4,4,4,4,4,4,4,4,4,4,4,4]},"125":{"advance":8,"rows":[0,0,0,12,24,24,16,16,112,16,16,24,24,24,12,0]},"126":{"advance":11,"rows":[0,0,0,0,0,0,0,0,60,480,0,0,0,0,0,0]}}})__FONT__";

}  // namespace font_data
}  // namespace actsynth
