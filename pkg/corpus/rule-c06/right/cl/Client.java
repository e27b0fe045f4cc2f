package cl;

import data.store.Keeper;

public class Client {
    public void save() {
        Keeper k = null;
        k.keep();
    }
}
