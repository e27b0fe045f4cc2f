package app;

import new.name.Util;

public class Extra {
    public void use() {
        Util.help();
    }
}
