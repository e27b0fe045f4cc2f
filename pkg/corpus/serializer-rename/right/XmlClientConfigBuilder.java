package com.hazelcast.config;

public class XmlClientConfigBuilder {
    private void handleSerializers(final Node node) {
        for (Node child : childElements(node)) {
            final String name2 = cleanNodeName(child);
            if ("type-serializer".equals(name2)) {
                TypeSerializerConfig serializerConfig = new TypeSerializerConfig();
                serializerConfig.setClassName(getAttribute(child, "class-name"));
                final String typeClassName = getAttribute(child, "type-class");
                serializerConfig.setTypeClassName(typeClassName);
                addTypeSerializer(serializerConfig);
            }
        }
    }

private Iterable<Node> childElements(Node node) {
    return null;
}

private String cleanNodeName(Node child) {
    return null;
}

private String getAttribute(Node node, String name) {
    return null;
}

    private void addTypeSerializer(TypeSerializerConfig serializerConfig) {
    }
}
