package com.hazelcast.client.proxy;

public class ClientMultiMapProxy extends ClientMap {
    public void put(Object key, Object value) {
        Data keyData = getSerializationService().toData(key);
        Data valueData = getSerializationService().toData(value);
        store(keyData, valueData);
    }

    public void store(Data k, Data v) {
    }
}
